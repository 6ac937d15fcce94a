#ifndef COVER_GENUS_BOUNDS_HPP
#define COVER_GENUS_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cover_genus/exact.hpp"
#include "cover_genus/fiber_product.hpp"
#include "cover_genus/normalization.hpp"

namespace cover_genus {

enum class Relation { GreaterEqual, Greater, LessEqual, Less, Equal };

std::string_view to_string(Relation r);

/// One evaluated inequality (or identity). `holds` compares lhs and rhs
/// exactly under `relation`. Inapplicable and skipped checks carry the failed
/// hypothesis or the exhausted limit in `reason` and never count as failures.
struct Check {
  std::string name;
  std::string context;
  bool applicable = false;
  bool skipped = false;
  std::string reason;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::GreaterEqual;
  bool holds = false;

  bool strict() const noexcept { return relation == Relation::Greater || relation == Relation::Less; }
  bool failed() const noexcept { return applicable && !skipped && !holds; }
};

Check make_check(std::string name, std::string context, Rational lhs, Relation rel, Rational rhs);
Check inapplicable(std::string name, std::string context, std::string reason);
Check skipped(std::string name, std::string context, std::string reason);

struct BoundReport {
  std::vector<Check> checks;

  bool any_failed() const;
};

/// Smallest genus among off-diagonal components of the k-fold self product;
/// nullopt when the tuple space exceeds the budget.
struct OffDiagonalSummary {
  std::size_t k = 0;
  std::optional<std::int64_t> min_genus;
  std::size_t components = 0;
};

OffDiagonalSummary offdiagonal_summary(const HurwitzSystem& w, std::size_t k,
                                       std::uint64_t budget = kDefaultTupleBudget);

/// Unique-component lower bound, its weak form, and the strict forms for a
/// sphere base. Hypotheses: deg W >= 2, one component, g(N_W) > 1. `norm_w`
/// is nullopt when |Mon(W)| exceeded the cap.
std::vector<Check> theorem1_check(const AlignedPair& pair, const FiberProductDecomposition& dec,
                                  const std::optional<NormalizationData>& norm_w);

/// Several-component bound on one component with deg V > 1, given the
/// deg V-fold off-diagonal summary of W.
Check theorem2_check(const AlignedPair& pair, const Component& c, const std::string& context,
                     const OffDiagonalSummary& w_kfold);

/// Rational-function form (base, source of A = W and source of B = P all
/// spheres), k = deg V of the component; strict.
Check theorem3_check(const AlignedPair& pair, const Component& c, const std::string& context,
                     const OffDiagonalSummary& a_kfold);

/// Tame A bound g(C) > 2 - n + m/n! on every non-graph component.
std::vector<Check> theorem_ratt_check(const AlignedPair& pair,
                                      const FiberProductDecomposition& dec,
                                      const std::optional<TamenessVerdict>& a_tame);

/// Upper bound g(R) deg V + g(T) deg U + (deg V - 1)(deg U - 1) >= g(E_j).
Check castelnuovo_severi_check(const AlignedPair& pair, const Component& c,
                               const std::string& context);

/// 84 (g(N) - 1) >= |Mon| whenever g(N) > 1.
Check hurwitz_check(const std::optional<NormalizationData>& norm, const std::string& context);

/// chi(O^V) >= chi(E) + chi(base)(1 - deg V); strict on a sphere base with
/// degree >= 2.
Check lemma2_check(const HurwitzSystem& h, const std::string& context);

struct VerifyConfig {
  Integer group_order_cap = kDefaultGroupOrderCap;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
};

/// Aligns the pair, decomposes it, normalizes both maps, and evaluates every
/// check. Deterministic in (p, w, config).
BoundReport verify_all(const HurwitzSystem& p, const HurwitzSystem& w,
                       const VerifyConfig& config = {});

}  // namespace cover_genus

#endif  // COVER_GENUS_BOUNDS_HPP
