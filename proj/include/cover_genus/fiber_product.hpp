#ifndef COVER_GENUS_FIBER_PRODUCT_HPP
#define COVER_GENUS_FIBER_PRODUCT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cover_genus/covering.hpp"

namespace cover_genus {

/// Two systems over one base sharing the same label list and handle count.
struct AlignedPair {
  HurwitzSystem p;
  HurwitzSystem w;
};

/// Merges the two label lists into one and inserts identity permutations
/// where a map is unbranched.
///
/// Labels shared by both systems must occur in the same relative order in
/// each (LabelConflict otherwise); they act as anchors of the merged list.
/// Between consecutive anchors the labels private to `p` come first, then
/// those private to `w`, each in their original order. Handles are identified
/// index by index. Throws BaseMismatch on differing base genus.
AlignedPair align(const HurwitzSystem& p, const HurwitzSystem& w);

bool is_aligned(const HurwitzSystem& p, const HurwitzSystem& w);

/// One irreducible component E_j of a fiber product, with its projections
/// V_j : E_j -> R (onto the source of p) and U_j : E_j -> T (onto the source
/// of w).
struct Component {
  /// The component as a covering of the common base; degree = orbit size.
  HurwitzSystem covering;
  std::int64_t deg_v = 0;
  std::int64_t deg_u = 0;
  std::int64_t genus = 0;
  std::int64_t chi = 0;
  /// Least encoded point of the orbit (1-based).
  std::uint64_t orbit_key = 0;
  /// Encoded points of the orbit, ascending (1-based); local point i of
  /// `covering` is points[i].
  std::vector<std::uint64_t> points;
  /// False when the component lies on the diagonal (only meaningful when the
  /// two factors are the same map). Always true for injective-tuple products.
  bool off_diagonal = true;
};

struct FiberProductDecomposition {
  std::vector<Component> components;
  std::size_t deg_p = 0;
  std::size_t deg_w = 0;

  std::size_t size() const noexcept { return components.size(); }
  std::int64_t chi_total() const;
};

/// Grid point (i, j) of {1..deg_p} x {1..deg_w} is encoded as
/// (i-1) deg_w + (j-1) + 1.
std::uint64_t encode_grid(std::size_t i, std::size_t j, std::size_t deg_w);
std::pair<std::size_t, std::size_t> decode_grid(std::uint64_t code, std::size_t deg_w);

/// Orbits of the diagonal action of the base generators on the grid. Components
/// are sorted by (orbit size, orbit key). Throws NotAligned.
FiberProductDecomposition fiber_product(const AlignedPair& pair);

/// (chi(C) - r) deg P deg W + sum_i sum_{j1,j2} gcd(p_{i,j1}, w_{i,j2}), read off
/// the two passports without computing orbits. Throws NotAligned.
std::int64_t abhyankar_chi_total(const AlignedPair& pair);

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/// Injective k-tuples of {0..n-1} ranked in lexicographic order through
/// falling-factorial mixed radix digits. Rank 0 is (0, 1, ..., k-1).
class InjectiveTupleSpace {
 public:
  InjectiveTupleSpace(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  /// n (n-1) ... (n-k+1); saturates at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(std::span<const Point> tuple) const;
  std::vector<Point> unrank(std::uint64_t rank) const;

  /// Rank of g applied coordinatewise to the tuple of rank `r`.
  std::uint64_t act(const Permutation& g, std::uint64_t r) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> weights_;
};

/// Components of the off-diagonal part of the k-fold self fiber product of v:
/// orbits of the diagonal action on injective k-tuples. Encoded points are
/// tuple rank + 1. Throws KOutOfRange unless 2 <= k <= deg v, BudgetExceeded
/// when the tuple space is larger than `budget`.
FiberProductDecomposition self_product_offdiagonal(const HurwitzSystem& v, std::size_t k,
                                                   std::uint64_t budget = kDefaultTupleBudget);

/// The single off-diagonal component through `seed` (an injective k-tuple,
/// 0-based). Only the reached orbit is materialized, so `budget` bounds the
/// orbit size rather than the tuple space.
Component self_product_component(const HurwitzSystem& v, std::span<const Point> seed,
                                 std::uint64_t budget = kDefaultTupleBudget);

}  // namespace cover_genus

#endif  // COVER_GENUS_FIBER_PRODUCT_HPP
