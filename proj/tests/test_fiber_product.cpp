#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "cover_genus/error.hpp"
#include "cover_genus/fiber_product.hpp"
#include "cover_genus/harness.hpp"
#include "oracles.hpp"

using namespace cover_genus;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

std::vector<std::size_t> sizes_of(const FiberProductDecomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& c : d.components) out.push_back(c.covering.degree);
  std::sort(out.begin(), out.end());
  return out;
}

// gcd-multiset of local multiplicities over one label:
// each pair of cycles (a, b) contributes gcd(a, b) points of index lcm(a, b).
std::vector<std::int64_t> expected_local(const Permutation& p, const Permutation& w) {
  std::vector<std::int64_t> out;
  const auto tp = cycle_type(p), tw = cycle_type(w);
  for (auto a : tp.parts()) {
    for (auto b : tw.parts()) {
      for (std::int64_t i = 0; i < std::gcd(a, b); ++i) out.push_back(std::lcm(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("align") {
  const auto pair = align(power_map(3), power_map(2));
  CHECK(pair.p == power_map(3));
  CHECK(pair.w == power_map(2));
  CHECK(is_aligned(pair.p, pair.w));

  const auto merged = align(power_map(2), chebyshev(3));
  CHECK(merged.p.labels() == std::vector<std::string>{"0", "1", "-1", "inf"});
  CHECK(merged.w.labels() == merged.p.labels());
  CHECK(merged.p.branch_points[1].perm.is_identity());
  CHECK(merged.p.branch_points[2].perm.is_identity());
  CHECK(merged.w.branch_points[0].perm.is_identity());
  CHECK(same_covering(merged.p, power_map(2)));
  CHECK(same_covering(merged.w, chebyshev(3)));
  CHECK_NOTHROW(validate(merged.p));

  const auto line = align(HurwitzSystem{1, 0, {}, {}}, chebyshev(3));
  CHECK(line.p.labels() == chebyshev(3).labels());
  for (const auto& bp : line.p.branch_points) CHECK(bp.perm.is_identity());

  CHECK(kind_of([] { align(HurwitzSystem{1, 1, {}, {{Permutation(1), Permutation(1)}}}, power_map(2)); }) ==
        ErrorKind::BaseMismatch);
  const auto t = Permutation::from_cycles(2, {{1, 2}});
  const HurwitzSystem ab{2, 0, {{"a", t}, {"b", t}}, {}};
  const HurwitzSystem ba{2, 0, {{"b", t}, {"a", t}}, {}};
  CHECK(kind_of([&] { align(ab, ba); }) == ErrorKind::LabelConflict);
}

TEST_CASE("fiber product examples") {
  const auto d22 = fiber_product(align(power_map(2), power_map(2)));
  REQUIRE(d22.size() == 2);
  for (const auto& c : d22.components) {
    CHECK(c.covering.degree == 2);
    CHECK(c.genus == 0);
    CHECK(c.deg_v == 1);
    CHECK(c.deg_u == 1);
  }
  // The diagonal {(1,1),(2,2)} has key 1, the antidiagonal key 2.
  CHECK(d22.components[0].points == std::vector<std::uint64_t>{1, 4});
  CHECK_FALSE(d22.components[0].off_diagonal);
  CHECK(d22.components[1].points == std::vector<std::uint64_t>{2, 3});
  CHECK(d22.components[1].off_diagonal);
  CHECK(d22.chi_total() == 4);
  CHECK(abhyankar_chi_total(align(power_map(2), power_map(2))) == 4);

  const auto pair32 = align(power_map(3), power_map(2));
  const auto d32 = fiber_product(pair32);
  REQUIRE(d32.size() == 1);
  CHECK(d32.components[0].covering.degree == 6);
  CHECK(d32.components[0].genus == 0);
  CHECK(d32.components[0].chi == 2);
  CHECK(d32.components[0].deg_v == 2);
  CHECK(d32.components[0].deg_u == 3);
  CHECK(abhyankar_chi_total(pair32) == 2);

  const auto h = hyperelliptic(2);
  const auto line = align(HurwitzSystem{1, 0, {}, {}}, h);
  const auto d1 = fiber_product(line);
  REQUIRE(d1.size() == 1);
  CHECK(d1.components[0].genus == 2);
  CHECK(same_covering(d1.components[0].covering, h));
  CHECK(abhyankar_chi_total(line) == euler_characteristic(h));

  CHECK(kind_of([] { fiber_product({power_map(2), chebyshev(3)}); }) == ErrorKind::NotAligned);
  CHECK(kind_of([] { abhyankar_chi_total({power_map(2), chebyshev(3)}); }) == ErrorKind::NotAligned);
}

TEST_CASE("grid encoding") {
  for (std::size_t dw = 1; dw <= 5; ++dw) {
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = 1; j <= dw; ++j) {
        const auto code = encode_grid(i, j, dw);
        CHECK(code == (i - 1) * dw + (j - 1) + 1);
        CHECK(decode_grid(code, dw) == std::pair{i, j});
      }
    }
  }
}

TEST_CASE("fiber product properties on random aligned pairs") {
  FuzzConfig cfg;
  cfg.seed = 4242;
  for (std::uint64_t trial = 0; trial < 600; ++trial) {
    const auto pair = fuzz_instance(cfg, trial);
    CAPTURE(trial);
    const auto d = fiber_product(pair);
    const auto dp = static_cast<std::int64_t>(pair.p.degree);
    const auto dw = static_cast<std::int64_t>(pair.w.degree);

    CHECK(sizes_of(d) == oracle::grid_orbit_sizes(pair.p, pair.w));
    CHECK(d.chi_total() == abhyankar_chi_total(pair));

    std::int64_t sum_v = 0, sum_u = 0;
    std::vector<std::uint64_t> all;
    for (const auto& c : d.components) {
      const auto size = static_cast<std::int64_t>(c.covering.degree);
      CHECK(c.deg_v * dp == size);
      CHECK(c.deg_u * dw == size);
      CHECK(c.chi == euler_characteristic(c.covering));
      CHECK(c.genus == genus(c.covering));
      CHECK(c.orbit_key == c.points.front());
      CHECK_NOTHROW(validate(c.covering));
      // Each point of R has deg V preimages on the component.
      std::vector<std::int64_t> per_row(pair.p.degree, 0);
      for (auto code : c.points) ++per_row[decode_grid(code, pair.w.degree).first - 1];
      for (auto n : per_row) CHECK(n == c.deg_v);
      sum_v += c.deg_v;
      sum_u += c.deg_u;
      all.insert(all.end(), c.points.begin(), c.points.end());
    }
    CHECK(sum_v == dw);
    CHECK(sum_u == dp);
    std::sort(all.begin(), all.end());
    std::vector<std::uint64_t> grid(pair.p.degree * pair.w.degree);
    std::iota(grid.begin(), grid.end(), 1);
    CHECK(all == grid);

    for (std::size_t i = 1; i < d.size(); ++i) {
      const auto& a = d.components[i - 1];
      const auto& b = d.components[i];
      CHECK(std::pair{a.covering.degree, a.orbit_key} < std::pair{b.covering.degree, b.orbit_key});
    }

    // Local multiplicities over each label match the gcd/lcm count.
    for (std::size_t l = 0; l < pair.p.branch_points.size(); ++l) {
      std::vector<std::int64_t> seen;
      for (const auto& c : d.components) {
        const auto parts = cycle_type(c.covering.branch_points[l].perm).parts();
        seen.insert(seen.end(), parts.begin(), parts.end());
      }
      std::sort(seen.begin(), seen.end());
      CHECK(seen == expected_local(pair.p.branch_points[l].perm, pair.w.branch_points[l].perm));
    }

    if (d.size() == 1) {
      CHECK(d.components[0].deg_v == dw);
      CHECK(d.components[0].deg_u == dp);
    }
  }
}

TEST_CASE("injective tuple ranking matches lexicographic enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const InjectiveTupleSpace space(n, k);
      const auto tuples = oracle::injective_tuples(n, k);
      REQUIRE(space.size() == tuples.size());
      for (std::size_t r = 0; r < tuples.size(); ++r) {
        std::vector<Point> t(tuples[r].begin(), tuples[r].end());
        CHECK(space.rank(t) == r);
        CHECK(space.unrank(r) == t);
      }
    }
  }
  CHECK(InjectiveTupleSpace(4, 2).size() == 12);
  CHECK(InjectiveTupleSpace(30, 30).size() == UINT64_MAX);
}

TEST_CASE("self product examples") {
  const auto d2 = self_product_offdiagonal(power_map(2), 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2.components[0].covering.degree == 2);
  CHECK(d2.components[0].genus == 0);

  const auto d3 = self_product_offdiagonal(power_map(3), 3);
  std::size_t total = 0;
  for (const auto& c : d3.components) total += c.covering.degree;
  CHECK(total == 6);
  CHECK(d3.size() == 2);

  // T_3 has monodromy S_3, so the injective triples form one orbit.
  const auto dt = self_product_offdiagonal(chebyshev(3), 3);
  REQUIRE(dt.size() == 1);
  CHECK(dt.components[0].covering.degree == 6);

  const auto dr = self_product_offdiagonal(zn_plus_inverse(2), 4);
  CHECK(dr.size() == 6);

  CHECK(kind_of([] { self_product_offdiagonal(power_map(3), 1); }) == ErrorKind::KOutOfRange);
  CHECK(kind_of([] { self_product_offdiagonal(power_map(3), 4); }) == ErrorKind::KOutOfRange);
  CHECK(kind_of([] { self_product_offdiagonal(power_map(5), 5, 100); }) ==
        ErrorKind::BudgetExceeded);
  const std::vector<Point> seed{0, 1, 2, 3, 4};
  CHECK(self_product_component(power_map(5), seed, 5).covering.degree == 5);
  CHECK(kind_of([&] { self_product_component(power_map(5), seed, 4); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("self product agrees with brute force") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Rng rng(31337, s);
    const auto degree = static_cast<std::size_t>(rng.range(2, 5));
    const auto g = rng.range(0, 1);
    const auto v = random_hurwitz_system(rng, degree, g, static_cast<std::size_t>(rng.range(g == 0 ? 2 : 1, 4)));
    const auto k = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(degree)));
    CAPTURE(s);
    const auto d = self_product_offdiagonal(v, k);
    std::vector<std::pair<std::size_t, std::int64_t>> got;
    for (const auto& c : d.components) {
      got.emplace_back(c.covering.degree, c.genus);
      CHECK(c.deg_v * static_cast<std::int64_t>(degree) == static_cast<std::int64_t>(c.covering.degree));
      CHECK_NOTHROW(validate(c.covering));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::self_product_profile(v, k));
  }
}
