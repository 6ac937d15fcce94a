#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cover_genus/bounds.hpp"
#include "cover_genus/harness.hpp"

using namespace cover_genus;

namespace {

const Check* find(const BoundReport& r, const std::string& name, const std::string& ctx = "") {
  for (const auto& c : r.checks) {
    if (c.name == name && (ctx.empty() || c.context == ctx)) return &c;
  }
  return nullptr;
}

std::vector<const Check*> all_named(const BoundReport& r, const std::string& name) {
  std::vector<const Check*> out;
  for (const auto& c : r.checks) {
    if (c.name == name) out.push_back(&c);
  }
  return out;
}

}  // namespace

TEST_CASE("exact helpers") {
  CHECK(falling_factorial(4, 2) == 12);
  for (int n = 0; n <= 8; ++n) CHECK(falling_factorial(n, n) == factorial(n));
  CHECK(falling_factorial(3, 4) == 0);
  CHECK(factorial(6) == 720);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("check construction") {
  const auto c = make_check("x", "pair", Rational(1), Relation::Greater, Rational(1));
  CHECK(c.applicable);
  CHECK(c.strict());
  CHECK_FALSE(c.holds);
  CHECK(c.failed());
  CHECK(make_check("x", "", Rational(1), Relation::GreaterEqual, Rational(1)).holds);
  CHECK(make_check("x", "", Rational(1), Relation::LessEqual, Rational(1)).holds);
  CHECK_FALSE(make_check("x", "", Rational(2), Relation::Less, Rational(1)).holds);
  CHECK(make_check("x", "", Rational(1, 3), Relation::Equal, Rational(2, 6)).holds);
  const auto i = inapplicable("x", "", "why");
  CHECK_FALSE(i.applicable);
  CHECK_FALSE(i.failed());
  const auto s = skipped("x", "", "budget");
  CHECK(s.skipped);
  CHECK_FALSE(s.failed());
}

TEST_CASE("theorem 1 hypotheses") {
  // The square z(z-1)^2 o z^2 has a genus-0 product although deg P/84 > 0:
  // the bound needs g(N_W) > 1.
  const auto d = pinned("dur_1_2");
  const auto dec = fiber_product(d);
  REQUIRE(dec.size() == 1);
  CHECK(dec.components[0].genus == 0);
  const auto nw = normalization_genus(d.w);
  CHECK(nw.genus_n == 0);
  const auto t1 = theorem1_check(d, dec, nw);
  REQUIRE(t1.size() == 4);
  for (const auto& c : t1) {
    CHECK_FALSE(c.applicable);
    CHECK(c.reason == "g(N_W) <= 1");
  }
  const Rational would_be = Rational(-1 * (2 - 1) + 1) + Rational(3, 84);
  CHECK(Rational(dec.components[0].genus) < would_be);

  const auto r = verify_all(pinned("generic5_x_line").p, pinned("generic5_x_line").w);
  const auto* c = find(r, "theorem1");
  REQUIRE(c != nullptr);
  CHECK(c->applicable);
  const auto gt = genus(pinned("generic5_x_line").w);
  CHECK(c->lhs == gt);
  CHECK(c->rhs == Rational(-1 * 4 + 1) + Rational(1, 84));
  CHECK(c->holds);
  const auto* v = find(r, "theorem1_vs_theorem2");
  REQUIRE(v != nullptr);
  CHECK(v->applicable);
  CHECK(v->holds);
  const auto* s = find(r, "theorem4");
  REQUIRE(s != nullptr);
  CHECK(s->applicable);
  CHECK(s->strict());
  CHECK(s->holds);

  const auto z = verify_all(power_map(2), power_map(2));
  CHECK(find(z, "theorem1")->reason == "n(P,W) > 1");
}

TEST_CASE("theorem 2 and 3 hypotheses") {
  const auto r = verify_all(power_map(3), power_map(2));
  const auto* t2 = find(r, "theorem2", "E1");
  REQUIRE(t2 != nullptr);
  CHECK_FALSE(t2->applicable);
  CHECK(t2->reason == "W has an off-diagonal 2-fold component of genus <= 1");
  const auto* t3 = find(r, "theorem3", "E1");
  REQUIRE(t3 != nullptr);
  CHECK_FALSE(t3->applicable);

  const auto r22 = verify_all(power_map(2), power_map(2));
  for (const auto* c : all_named(r22, "theorem2")) {
    CHECK_FALSE(c->applicable);
    CHECK(c->reason == "deg V = 1");
  }

  // With k = deg W the theorem 3 bound reads 2 - n + m/n!.
  const auto pair = pinned("generic4_x_double");
  Component c;
  c.deg_v = static_cast<std::int64_t>(pair.w.degree);
  c.deg_u = static_cast<std::int64_t>(pair.p.degree);
  c.genus = 50;
  const auto check = theorem3_check(pair, c, "E1", OffDiagonalSummary{pair.w.degree, 7, 1});
  REQUIRE(check.applicable);
  CHECK(check.rhs == Rational(2 - 4) + Rational(2, 24));
  CHECK(check.strict());
}

TEST_CASE("rational tame bound") {
  const auto wild = verify_all(power_map(3), power_map(2));
  const auto* c = find(wild, "theorem_ratt");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->applicable);
  CHECK(c->reason == "A is wild");

  const auto a = pinned("generic4_x_double").w;
  REQUIRE(is_tame(a).tame);
  const auto r = verify_all(a, a);
  const auto checks = all_named(r, "theorem_ratt");
  int graph = 0, asserted = 0;
  for (const auto* x : checks) {
    if (!x->applicable) {
      CHECK(x->reason == "graph component (deg V = 1)");
      ++graph;
    } else {
      CHECK(x->holds);
      CHECK(x->rhs == Rational(2 - 4) + Rational(4, 24));
      ++asserted;
    }
  }
  CHECK(graph == 1);
  CHECK(asserted >= 1);
}

TEST_CASE("castelnuovo severi") {
  const auto r22 = verify_all(power_map(2), power_map(2));
  for (const auto* c : all_named(r22, "castelnuovo_severi")) {
    CHECK(c->lhs == 0);
    CHECK(c->rhs == 0);
    CHECK(c->holds);
  }
  const auto r32 = verify_all(power_map(3), power_map(2));
  const auto* c = find(r32, "castelnuovo_severi");
  CHECK(c->lhs == 0);
  CHECK(c->rhs == 2);
  const auto h = hyperelliptic(2);
  const auto r1 = verify_all(HurwitzSystem{1, 0, {}, {}}, h);
  const auto* e = find(r1, "castelnuovo_severi");
  CHECK(e->lhs == 2);
  CHECK(e->rhs == 2);
  CHECK(e->holds);
  CHECK_FALSE(r1.any_failed());
}

TEST_CASE("hurwitz bound") {
  NormalizationData n;
  n.mon_order = 10;
  n.genus_n = 2;
  CHECK(hurwitz_check(n, "W").rhs == 84);
  n.genus_n = 3;
  CHECK(hurwitz_check(n, "W").rhs == 168);
  n.genus_n = 1;
  CHECK_FALSE(hurwitz_check(n, "W").applicable);
  CHECK(hurwitz_check(std::nullopt, "W").skipped);
}

TEST_CASE("lemma 2") {
  const auto z = lemma2_check(power_map(3), "P");
  CHECK(z.lhs == Rational(2, 3));
  CHECK(z.rhs == -2);
  CHECK(z.strict());
  CHECK(z.holds);
  const HurwitzSystem line{1, 2, {}, {{Permutation(1), Permutation(1)}, {Permutation(1), Permutation(1)}}};
  const auto l = lemma2_check(line, "P");
  CHECK(l.lhs == l.rhs);
  CHECK_FALSE(l.strict());
  CHECK(l.holds);
}

TEST_CASE("verify_all") {
  const auto r = verify_all(power_map(2), power_map(2));
  CHECK_FALSE(r.any_failed());
  CHECK(find(r, "abhyankar_gcd")->holds);
  CHECK(find(r, "degree_sum_v")->holds);
  CHECK(find(r, "degree_sum_u")->holds);
  CHECK_FALSE(find(r, "theorem1")->applicable);

  const auto line = verify_all(HurwitzSystem{1, 0, {}, {}}, chebyshev(4));
  CHECK_FALSE(line.any_failed());

  VerifyConfig tight;
  tight.group_order_cap = 2;
  const auto capped = verify_all(chebyshev(3), chebyshev(3), tight);
  CHECK(find(capped, "hurwitz", "W")->skipped);
  CHECK_FALSE(capped.any_failed());
}

TEST_CASE("pinned instances reach the rare checks") {
  std::map<std::string, int> applicable;
  for (const auto& name : pinned_names()) {
    const auto pair = pinned(name);
    const auto r = verify_all(pair.p, pair.w);
    CAPTURE(name);
    CHECK_FALSE(r.any_failed());
    for (const auto& c : r.checks) {
      if (c.applicable && !c.skipped) ++applicable[c.name];
    }
  }
  for (const char* name : {"abhyankar_gcd", "degree_sum_v", "degree_sum_u", "lemma2",
                           "castelnuovo_severi", "hurwitz", "theorem1", "theorem1_weak",
                           "theorem4", "theorem4_weak", "theorem1_vs_theorem2", "theorem2",
                           "theorem3", "theorem_ratt"}) {
    CAPTURE(name);
    CHECK(applicable[name] > 0);
  }
}
