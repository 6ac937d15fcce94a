#ifndef COVER_GENUS_NORMALIZATION_HPP
#define COVER_GENUS_NORMALIZATION_HPP

#include <cstdint>
#include <optional>

#include "cover_genus/covering.hpp"
#include "cover_genus/fiber_product.hpp"

namespace cover_genus {

/// The Galois closure N_V -> base of a covering V.
struct NormalizationData {
  /// |Mon(V)|, which is also the degree of N_V over the base.
  Integer mon_order;
  Orbifold orbifold;
  Integer chi_n;
  std::int64_t genus_n = 0;
  /// The explicit closure built from injective tuples, when it fit the budget.
  std::optional<HurwitzSystem> explicit_cover;
};

/// Order of the group generated by all handle and branch permutations.
Integer monodromy_order(const HurwitzSystem& h, const Integer& cap = kDefaultGroupOrderCap);

/// chi(N) = chi(O^V) |Mon(V)|. Throws OrderExceedsCap, or InternalConsistency
/// if the product is not an even integer.
NormalizationData normalization_genus(const HurwitzSystem& h,
                                      const Integer& cap = kDefaultGroupOrderCap);

/// The component of the injective deg(h)-tuple product containing the
/// lexicographically least tuple (1, 2, ..., n), as a covering of the base.
/// A degree-one map is its own closure and is returned unchanged. Throws
/// BudgetExceeded when the orbit outgrows `budget`.
HurwitzSystem normalization_explicit(const HurwitzSystem& h,
                                     std::uint64_t budget = kDefaultTupleBudget);

/// Both routes. The explicit cover is attached when it fits the budget and is
/// checked against the orbifold route (InternalConsistency on mismatch).
NormalizationData normalize(const HurwitzSystem& h, const Integer& cap = kDefaultGroupOrderCap,
                            std::uint64_t budget = kDefaultTupleBudget);

/// |Mon| = degree.
bool is_galois(const HurwitzSystem& h, const Integer& cap = kDefaultGroupOrderCap);

struct TamenessVerdict {
  bool tame = false;
  /// First off-diagonal component of genus <= 1, when wild.
  std::optional<Component> witness;
};

/// Tame iff every off-diagonal component of the 2-fold self product has
/// genus >= 2. Throws KOutOfRange for degree < 2.
TamenessVerdict is_tame(const HurwitzSystem& h, std::uint64_t budget = kDefaultTupleBudget);

}  // namespace cover_genus

#endif  // COVER_GENUS_NORMALIZATION_HPP
