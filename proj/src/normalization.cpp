#include "cover_genus/normalization.hpp"

#include <numeric>

#include "cover_genus/error.hpp"

namespace cover_genus {

Integer monodromy_order(const HurwitzSystem& h, const Integer& cap) {
  return group_order(h.generators(), h.degree, cap);
}

NormalizationData normalization_genus(const HurwitzSystem& h, const Integer& cap) {
  NormalizationData out;
  out.mon_order = monodromy_order(h, cap);
  out.orbifold = ramification_orbifold(h);
  const Rational chi = orbifold_chi(out.orbifold) * out.mon_order;
  if (!is_integer(chi) || boost::multiprecision::numerator(chi) % 2 != 0) {
    throw Error(ErrorKind::InternalConsistency,
                "orbifold characteristic times |Mon| is " + to_string(chi) +
                    ", not an even integer");
  }
  out.chi_n = boost::multiprecision::numerator(chi);
  out.genus_n = genus_from_chi(static_cast<std::int64_t>(out.chi_n));
  return out;
}

HurwitzSystem normalization_explicit(const HurwitzSystem& h, std::uint64_t budget) {
  if (h.degree == 1) return h;
  std::vector<Point> seed(h.degree);
  std::iota(seed.begin(), seed.end(), Point{0});
  return self_product_component(h, seed, budget).covering;
}

NormalizationData normalize(const HurwitzSystem& h, const Integer& cap, std::uint64_t budget) {
  NormalizationData out = normalization_genus(h, cap);
  try {
    HurwitzSystem cover = normalization_explicit(h, budget);
    if (Integer(cover.degree) != out.mon_order ||
        Integer(euler_characteristic(cover)) != out.chi_n) {
      throw Error(ErrorKind::InternalConsistency,
                  "explicit closure has degree " + std::to_string(cover.degree) + " and chi " +
                      std::to_string(euler_characteristic(cover)) + ", orbifold route gives " +
                      to_string(out.mon_order) + " and " + to_string(out.chi_n));
    }
    out.explicit_cover = std::move(cover);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
  }
  return out;
}

bool is_galois(const HurwitzSystem& h, const Integer& cap) {
  return monodromy_order(h, cap) == h.degree;
}

TamenessVerdict is_tame(const HurwitzSystem& h, std::uint64_t budget) {
  if (h.degree < 2) {
    throw Error(ErrorKind::KOutOfRange, "tameness needs degree >= 2");
  }
  const auto dec = self_product_offdiagonal(h, 2, budget);
  for (const auto& c : dec.components) {
    if (c.genus <= 1) return {false, c};
  }
  return {true, std::nullopt};
}

}  // namespace cover_genus
