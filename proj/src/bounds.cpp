#include "cover_genus/bounds.hpp"

#include <algorithm>
#include <map>

#include "cover_genus/error.hpp"

namespace cover_genus {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    case Relation::LessEqual: return "<=";
    case Relation::Less: return "<";
    case Relation::Equal: return "==";
  }
  return "?";
}

Check make_check(std::string name, std::string context, Rational lhs, Relation rel, Rational rhs) {
  Check c;
  c.name = std::move(name);
  c.context = std::move(context);
  c.applicable = true;
  c.relation = rel;
  switch (rel) {
    case Relation::GreaterEqual: c.holds = lhs >= rhs; break;
    case Relation::Greater: c.holds = lhs > rhs; break;
    case Relation::LessEqual: c.holds = lhs <= rhs; break;
    case Relation::Less: c.holds = lhs < rhs; break;
    case Relation::Equal: c.holds = lhs == rhs; break;
  }
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

Check inapplicable(std::string name, std::string context, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.context = std::move(context);
  c.reason = std::move(reason);
  return c;
}

Check skipped(std::string name, std::string context, std::string reason) {
  Check c = inapplicable(std::move(name), std::move(context), std::move(reason));
  c.skipped = true;
  return c;
}

bool BoundReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); });
}

OffDiagonalSummary offdiagonal_summary(const HurwitzSystem& w, std::size_t k,
                                       std::uint64_t budget) {
  OffDiagonalSummary s;
  s.k = k;
  try {
    const auto dec = self_product_offdiagonal(w, k, budget);
    s.components = dec.size();
    for (const auto& c : dec.components) {
      s.min_genus = s.min_genus ? std::min(*s.min_genus, c.genus) : c.genus;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
  }
  return s;
}

namespace {

struct PairFacts {
  std::int64_t deg_p;
  std::int64_t deg_w;
  std::int64_t genus_r;  // source of P
  std::int64_t genus_t;  // source of W
  std::int64_t base_genus;

  explicit PairFacts(const AlignedPair& pair)
      : deg_p(static_cast<std::int64_t>(pair.p.degree)),
        deg_w(static_cast<std::int64_t>(pair.w.degree)),
        genus_r(genus(pair.p)),
        genus_t(genus(pair.w)),
        base_genus(pair.p.base_genus) {}

  bool all_spheres() const { return base_genus == 0 && genus_r == 0 && genus_t == 0; }
};

// (g(R) - 1)(d - 1) + 1
Rational linear_part(std::int64_t genus_r, std::int64_t d) {
  return Rational((genus_r - 1) * (d - 1) + 1);
}

Rational theorem1_rhs(const PairFacts& f) {
  return linear_part(f.genus_r, f.deg_w) + Rational(f.deg_p, 84);
}

Rational theorem1_weak_rhs(const PairFacts& f) {
  return Rational(f.deg_p - 84 * f.deg_w + 168, 84);
}

Rational theorem2_rhs(const PairFacts& f, std::int64_t k) {
  return linear_part(f.genus_r, k) + Rational(Integer(f.deg_p), falling_factorial(f.deg_w, k));
}

std::string kfold_reason(std::size_t k) {
  return "W has an off-diagonal " + std::to_string(k) + "-fold component of genus <= 1";
}

}  // namespace

std::vector<Check> theorem1_check(const AlignedPair& pair, const FiberProductDecomposition& dec,
                                  const std::optional<NormalizationData>& norm_w) {
  const PairFacts f(pair);
  const std::string ctx = dec.size() == 1 ? "E1" : "pair";
  const std::vector<std::string> names{"theorem1", "theorem1_weak", "theorem4", "theorem4_weak"};

  std::string reason;
  bool skip = false;
  if (dec.size() != 1) {
    reason = "n(P,W) > 1";
  } else if (!norm_w) {
    reason = "|Mon(W)| exceeds group order cap";
    skip = true;
  } else if (norm_w->genus_n <= 1) {
    reason = "g(N_W) <= 1";
  }

  std::vector<Check> out;
  for (const auto& name : names) {
    const bool strict_form = name.starts_with("theorem4");
    std::string why = reason;
    if (why.empty() && !strict_form && f.deg_w < 2) why = "deg W < 2";
    if (why.empty() && strict_form && f.base_genus != 0) why = "base is not a sphere";
    if (!why.empty()) {
      out.push_back(skip ? skipped(name, ctx, why) : inapplicable(name, ctx, why));
      continue;
    }
    const Rational g(dec.components.front().genus);
    const Rational rhs = name.ends_with("_weak") ? theorem1_weak_rhs(f) : theorem1_rhs(f);
    out.push_back(make_check(name, ctx, g, strict_form ? Relation::Greater : Relation::GreaterEqual,
                             rhs));
  }
  return out;
}

Check theorem2_check(const AlignedPair& pair, const Component& c, const std::string& context,
                     const OffDiagonalSummary& w_kfold) {
  const std::string name = "theorem2";
  if (c.deg_v <= 1) return inapplicable(name, context, "deg V = 1");
  if (!w_kfold.min_genus) return skipped(name, context, "injective tuples exceed tuple budget");
  if (*w_kfold.min_genus <= 1) return inapplicable(name, context, kfold_reason(w_kfold.k));
  const PairFacts f(pair);
  return make_check(name, context, Rational(c.genus), Relation::GreaterEqual,
                    theorem2_rhs(f, c.deg_v));
}

Check theorem3_check(const AlignedPair& pair, const Component& c, const std::string& context,
                     const OffDiagonalSummary& a_kfold) {
  const std::string name = "theorem3";
  const PairFacts f(pair);
  if (!f.all_spheres()) return inapplicable(name, context, "not all surfaces are spheres");
  if (c.deg_v <= 1) return inapplicable(name, context, "k = 1");
  if (!a_kfold.min_genus) return skipped(name, context, "injective tuples exceed tuple budget");
  if (*a_kfold.min_genus <= 1) return inapplicable(name, context, kfold_reason(a_kfold.k));
  // A = W of degree n, B = P of degree m, k = deg V.
  const Rational rhs = Rational(2 - c.deg_v) +
                       Rational(Integer(f.deg_p), falling_factorial(f.deg_w, c.deg_v));
  return make_check(name, context, Rational(c.genus), Relation::Greater, rhs);
}

std::vector<Check> theorem_ratt_check(const AlignedPair& pair,
                                      const FiberProductDecomposition& dec,
                                      const std::optional<TamenessVerdict>& a_tame) {
  const std::string name = "theorem_ratt";
  const PairFacts f(pair);
  if (!f.all_spheres()) return {inapplicable(name, "pair", "not all surfaces are spheres")};
  if (f.deg_w < 2) return {inapplicable(name, "pair", "deg A < 2")};
  if (!a_tame) return {skipped(name, "pair", "injective tuples exceed tuple budget")};
  if (!a_tame->tame) return {inapplicable(name, "pair", "A is wild")};

  std::vector<Check> out;
  const Rational rhs = Rational(2 - f.deg_w) + Rational(Integer(f.deg_p), factorial(f.deg_w));
  for (std::size_t j = 0; j < dec.size(); ++j) {
    const auto& c = dec.components[j];
    const std::string ctx = "E" + std::to_string(j + 1);
    if (c.deg_v == 1) {
      out.push_back(inapplicable(name, ctx, "graph component (deg V = 1)"));
    } else {
      out.push_back(make_check(name, ctx, Rational(c.genus), Relation::Greater, rhs));
    }
  }
  return out;
}

Check castelnuovo_severi_check(const AlignedPair& pair, const Component& c,
                               const std::string& context) {
  const PairFacts f(pair);
  const std::int64_t bound =
      f.genus_r * c.deg_v + f.genus_t * c.deg_u + (c.deg_v - 1) * (c.deg_u - 1);
  return make_check("castelnuovo_severi", context, Rational(c.genus), Relation::LessEqual,
                    Rational(bound));
}

Check hurwitz_check(const std::optional<NormalizationData>& norm, const std::string& context) {
  const std::string name = "hurwitz";
  if (!norm) return skipped(name, context, "|Mon| exceeds group order cap");
  if (norm->genus_n <= 1) return inapplicable(name, context, "g(N) <= 1");
  return make_check(name, context, Rational(norm->mon_order), Relation::LessEqual,
                    Rational(84 * (norm->genus_n - 1)));
}

Check lemma2_check(const HurwitzSystem& h, const std::string& context) {
  const Rational lhs = orbifold_chi(ramification_orbifold(h));
  const auto deg = static_cast<std::int64_t>(h.degree);
  const Rational rhs(euler_characteristic(h) + base_chi(h.base_genus) * (1 - deg));
  const bool strict = h.base_genus == 0 && h.degree >= 2;
  return make_check("lemma2", context, lhs, strict ? Relation::Greater : Relation::GreaterEqual,
                    rhs);
}

BoundReport verify_all(const HurwitzSystem& p, const HurwitzSystem& w,
                       const VerifyConfig& config) {
  validate(p);
  validate(w);
  const AlignedPair pair = align(p, w);
  const PairFacts f(pair);
  const auto dec = fiber_product(pair);
  BoundReport report;
  auto& checks = report.checks;

  checks.push_back(make_check("abhyankar_gcd", "pair", Rational(dec.chi_total()), Relation::Equal,
                              Rational(abhyankar_chi_total(pair))));
  std::int64_t sum_v = 0, sum_u = 0;
  for (const auto& c : dec.components) {
    sum_v += c.deg_v;
    sum_u += c.deg_u;
  }
  checks.push_back(make_check("degree_sum_v", "pair", Rational(sum_v), Relation::Equal,
                              Rational(f.deg_w)));
  checks.push_back(make_check("degree_sum_u", "pair", Rational(sum_u), Relation::Equal,
                              Rational(f.deg_p)));

  checks.push_back(lemma2_check(pair.p, "P"));
  checks.push_back(lemma2_check(pair.w, "W"));
  for (std::size_t j = 0; j < dec.size(); ++j) {
    checks.push_back(lemma2_check(dec.components[j].covering, "E" + std::to_string(j + 1)));
  }
  for (std::size_t j = 0; j < dec.size(); ++j) {
    checks.push_back(castelnuovo_severi_check(pair, dec.components[j], "E" + std::to_string(j + 1)));
  }

  auto normalized = [&](const HurwitzSystem& h) -> std::optional<NormalizationData> {
    try {
      return normalization_genus(h, config.group_order_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderExceedsCap) throw;
      return std::nullopt;
    }
  };
  const auto norm_p = normalized(pair.p);
  const auto norm_w = normalized(pair.w);
  checks.push_back(hurwitz_check(norm_p, "P"));
  checks.push_back(hurwitz_check(norm_w, "W"));

  const auto t1 = theorem1_check(pair, dec, norm_w);
  checks.insert(checks.end(), t1.begin(), t1.end());

  {
    const std::string name = "theorem1_vs_theorem2";
    const Check& first = t1.front();
    if (!first.applicable || first.skipped) {
      checks.push_back(inapplicable(name, first.context, "theorem1 not applicable"));
    } else if (factorial(f.deg_w) < 84) {
      checks.push_back(inapplicable(name, first.context, "deg W! < 84"));
    } else {
      checks.push_back(make_check(name, first.context, theorem1_rhs(f), Relation::GreaterEqual,
                                  theorem2_rhs(f, f.deg_w)));
    }
  }

  std::map<std::size_t, OffDiagonalSummary> kfold;
  auto summary = [&](std::size_t k) -> const OffDiagonalSummary& {
    auto it = kfold.find(k);
    if (it == kfold.end()) {
      it = kfold.emplace(k, offdiagonal_summary(pair.w, k, config.tuple_budget)).first;
    }
    return it->second;
  };
  for (std::size_t j = 0; j < dec.size(); ++j) {
    const auto& c = dec.components[j];
    const std::string ctx = "E" + std::to_string(j + 1);
    const OffDiagonalSummary none{};
    const auto& s = c.deg_v >= 2 ? summary(static_cast<std::size_t>(c.deg_v)) : none;
    checks.push_back(theorem2_check(pair, c, ctx, s));
    checks.push_back(theorem3_check(pair, c, ctx, s));
  }

  std::optional<TamenessVerdict> tame;
  if (f.all_spheres() && f.deg_w >= 2) {
    if (const auto& s = summary(2); s.min_genus) tame = TamenessVerdict{*s.min_genus >= 2, {}};
  }
  const auto ratt = theorem_ratt_check(pair, dec, tame);
  checks.insert(checks.end(), ratt.begin(), ratt.end());
  return report;
}

}  // namespace cover_genus
