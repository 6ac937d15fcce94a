#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cover_genus/error.hpp"
#include "cover_genus/perm.hpp"
#include "oracles.hpp"

using namespace cover_genus;

namespace {

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> c) {
  return Permutation::from_cycles(n, c);
}

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

}  // namespace

TEST_CASE("compose") {
  CHECK(compose(Permutation(3), cyc(3, {{1, 2, 3}})) == cyc(3, {{1, 2, 3}}));
  CHECK(compose(cyc(2, {{1, 2}}), cyc(2, {{1, 2}})).is_identity());
  // q acts first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(compose(cyc(3, {{1, 2}}), cyc(3, {{2, 3}})) == cyc(3, {{1, 2, 3}}));
  CHECK(compose(cyc(3, {{2, 3}}), cyc(3, {{1, 2}})) == cyc(3, {{1, 3, 2}}));
  CHECK(compose(cyc(3, {{1, 2}}), cyc(3, {{2, 3}})).to_string() == "(1 2 3)");
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), Error);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), Error);
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(cyc(3, {{1, 2}, {2, 3}}), Error);
  try {
    cyc(3, {{0, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPermutation);
  }
}

TEST_CASE("cycles and printing") {
  const auto p = cyc(5, {{3, 5}, {4, 1, 2}});
  CHECK(p.to_string() == "(1 2 4)(3 5)");
  CHECK(Permutation(4).to_string() == "()");
  CHECK(p.inverse() * p == Permutation(5));
  CHECK(commutator(cyc(3, {{1, 2}}), cyc(3, {{2, 3}})) == cyc(3, {{1, 2, 3}}) * cyc(3, {{1, 2, 3}}));
}

TEST_CASE("cycle type") {
  CHECK(cycle_type(Permutation(4)).parts() == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(cycle_type(cyc(5, {{1, 2, 3}})).parts() == std::vector<std::int64_t>{3, 1, 1});
  const auto t = cycle_type(cyc(5, {{1, 2}, {3, 4, 5}}));
  CHECK(t.parts() == std::vector<std::int64_t>{3, 2});
  CHECK(t.to_string() == "{3,2}");
  CHECK(t.ramification() == 3);
  CHECK(t.lcm() == 6);
  CHECK(t.degree() == 5);
}

TEST_CASE("orbits and transitivity") {
  const std::vector<Permutation> id{Permutation(3)};
  CHECK(orbits(id, 3) == std::vector<std::vector<Point>>{{0}, {1}, {2}});
  const std::vector<Permutation> c3{cyc(3, {{1, 2, 3}})};
  CHECK(orbits(c3, 3) == std::vector<std::vector<Point>>{{0, 1, 2}});
  const std::vector<Permutation> t{cyc(3, {{1, 2}})};
  CHECK(orbits(t, 3) == std::vector<std::vector<Point>>{{0, 1}, {2}});
  CHECK(is_transitive(c3, 3));
  CHECK_FALSE(is_transitive(t, 3));
  const std::vector<Permutation> s3{cyc(3, {{1, 2}}), cyc(3, {{2, 3}})};
  CHECK(is_transitive(s3, 3));
}

TEST_CASE("action_orbit budget") {
  const Action shift = [](std::size_t, std::uint64_t x) { return (x + 1) % 10; };
  CHECK(action_orbit(3, 1, shift, 10).size() == 10);
  CHECK_THROWS_AS(action_orbit(3, 1, shift, 9), Error);
}

TEST_CASE("group order examples") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<std::int64_t> c(n);
    std::iota(c.begin(), c.end(), 1);
    const std::vector<Permutation> g{Permutation::from_cycles(n, std::vector<std::vector<std::int64_t>>{c})};
    CHECK(group_order(g, n) == n);
  }
  const std::vector<Permutation> s3{cyc(3, {{1, 2}}), cyc(3, {{2, 3}})};
  CHECK(group_order(s3, 3) == 6);
  CHECK(oracle::cayley_order(s3, 3) == 6);
  const std::vector<Permutation> s5{cyc(5, {{1, 2}}), cyc(5, {{1, 2, 3, 4, 5}})};
  CHECK(group_order(s5, 5) == 120);
  CHECK(oracle::cayley_order(s5, 5) == 120);
  const std::vector<Permutation> none;
  CHECK(group_order(none, 4) == 1);
}

TEST_CASE("group order cap") {
  const std::vector<Permutation> s5{cyc(5, {{1, 2}}), cyc(5, {{1, 2, 3, 4, 5}})};
  CHECK(group_order(s5, 5, 120) == 120);
  try {
    group_order(s5, 5, 119);
    FAIL("expected OrderExceedsCap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderExceedsCap);
  }
  std::vector<Permutation> s12{Permutation::from_cycles(12, {{1, 2}})};
  std::vector<std::int64_t> full(12);
  std::iota(full.begin(), full.end(), 1);
  s12.push_back(Permutation::from_cycles(12, std::vector<std::vector<std::int64_t>>{full}));
  CHECK(group_order(s12, 12, Integer(479001600)) == 479001600);
  CHECK_THROWS_AS(group_order(s12, 12), Error);
}

TEST_CASE("group order agrees with Cayley enumeration") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      // Mix in sparse generators so intransitive and small groups show up.
      gens.push_back(rng() % 2 ? random_perm(rng, n)
                               : Permutation::from_images([&] {
                                   std::vector<Point> img(n);
                                   std::iota(img.begin(), img.end(), Point{0});
                                   if (n >= 2) std::swap(img[rng() % n], img[rng() % n]);
                                   return img;
                                 }()));
    }
    const auto expected = oracle::cayley_order(gens, n);
    CAPTURE(trial);
    CHECK(group_order(gens, n) == expected);
  }
}

TEST_CASE("permutation algebra properties") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * Permutation(n) == a);
    CHECK(a * a.inverse() == Permutation(n));
    CHECK(cycle_type(b * a * b.inverse()) == cycle_type(a));
    CHECK(cycle_type(a).degree() == static_cast<std::int64_t>(n));
    CHECK(Permutation::from_cycles(n, a.cycles()) == a);
    const std::vector<Permutation> gens{a, b};
    std::size_t covered = 0;
    for (const auto& o : orbits(gens, n)) {
      covered += o.size();
      for (auto x : o) {
        CHECK(std::binary_search(o.begin(), o.end(), a(x)));
        CHECK(std::binary_search(o.begin(), o.end(), b(x)));
      }
    }
    CHECK(covered == n);
  }
}
