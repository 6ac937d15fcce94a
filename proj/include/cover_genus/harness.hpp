#ifndef COVER_GENUS_HARNESS_HPP
#define COVER_GENUS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cover_genus/bounds.hpp"
#include "cover_genus/covering.hpp"
#include "cover_genus/fiber_product.hpp"

namespace cover_genus {

/// Portable random stream: std::mt19937_64 (bit-exact by the standard),
/// seeded through std::seed_seq with the 32-bit halves of the seed and of the
/// stream index. Bounded draws use bitmask rejection and permutations use
/// Fisher-Yates from the last position down, so every platform produces the
/// same instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  Permutation permutation(std::size_t degree);

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kGenerationRetries = 1000;

/// Uniform handles and branch permutations with the last branch permutation
/// solved from the relation. Resamples until the system is transitive and,
/// for degree >= 2 over a sphere, the last permutation is nontrivial. Throws
/// RetriesExhausted.
HurwitzSystem random_hurwitz_system(Rng& rng, std::size_t degree, std::int64_t base_genus,
                                    const std::vector<std::string>& labels);
HurwitzSystem random_hurwitz_system(Rng& rng, std::size_t degree, std::int64_t base_genus,
                                    std::size_t branch_count);

// Fixtures. Labels: "0", "inf" for z^n; "1", "-1", "inf" for T_n and
// (z^n + z^-n)/2; "b1".."b{2g+2}" for the hyperelliptic double cover.
HurwitzSystem power_map(std::size_t n);
HurwitzSystem chebyshev(std::size_t n);
HurwitzSystem zn_plus_inverse(std::size_t n);
HurwitzSystem hyperelliptic(std::int64_t g);

/// The square z^r (z-1)^n o z^n = z^n o z^r (z^n - 1): p is the polynomial
/// z^r (z-1)^n over labels "0", "c", "inf" (c its non-zero critical value),
/// w is z^n. For gcd(r, n) = 1 the product is one genus-zero component while
/// g(N_w) = 0.
AlignedPair dur(std::size_t r, std::size_t n);

using FixtureValue = std::variant<HurwitzSystem, AlignedPair>;

/// Parses names like "power(3)", "chebyshev(3)", "zn_plus_inverse(2)",
/// "hyperelliptic(2)", "dur(1,2)" and the pinned pairs listed by
/// `pinned_names()`. Throws UnknownFixture.
FixtureValue fixture(const std::string& name);

/// Hand-built pairs, each applicable for at least one rarely-triggered check.
std::vector<std::string> pinned_names();
AlignedPair pinned(const std::string& name);

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10'000;
  std::size_t max_degree = 6;
  std::size_t max_branch = 5;
  std::int64_t min_base_genus = 0;
  std::int64_t max_base_genus = 2;
  Integer group_order_cap = kDefaultGroupOrderCap;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
};

/// The pair for one trial, derived from (seed, trial) only.
AlignedPair fuzz_instance(const FuzzConfig& config, std::uint64_t trial);

struct CheckCounters {
  std::uint64_t evaluated = 0;
  std::uint64_t applicable = 0;
  std::uint64_t holds = 0;
  std::uint64_t failed = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t skipped = 0;
  std::map<std::string, std::uint64_t> reasons;
};

struct FuzzFailure {
  std::uint64_t trial = 0;
  std::string check;
  std::string context;
};

struct FuzzSummary {
  FuzzConfig config;
  std::uint64_t trials_run = 0;
  std::map<std::string, CheckCounters> checks;
  std::vector<FuzzFailure> failures;

  bool any_failed() const { return !failures.empty(); }
};

void accumulate(FuzzSummary& summary, std::uint64_t trial, const BoundReport& report);

/// Runs verify_all on every trial. Trials are independent; `jobs > 1` splits
/// them across threads and merges in trial order, so the summary does not
/// depend on `jobs`.
FuzzSummary fuzz(const FuzzConfig& config, unsigned jobs = 1);

}  // namespace cover_genus

#endif  // COVER_GENUS_HARNESS_HPP
