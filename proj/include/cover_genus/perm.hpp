#ifndef COVER_GENUS_PERM_HPP
#define COVER_GENUS_PERM_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cover_genus/exact.hpp"

namespace cover_genus {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}.
///
/// Points are 0-based internally. Every external representation (cycle
/// notation, JSON, text output) is 1-based: internal point i is printed as i+1.
///
/// Products are read right-to-left: `p * q` maps x to p(q(x)), so q acts
/// first. All monodromy relations in this library are stated with respect to
/// this order.
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// From 0-based images; throws InvalidPermutation unless a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// From 1-based disjoint cycles; fixed points may be omitted.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::int64_t>>& cycles);
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<std::int64_t>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// 1-based cycles of length >= 2, each starting at its least point, ordered
  /// by least point. The identity yields an empty list.
  std::vector<std::vector<std::int64_t>> cycles() const;

  /// Cycle notation, e.g. "(1 2 3)(4 5)"; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x -> p(q(x)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

/// a b a^-1 b^-1
Permutation commutator(const Permutation& a, const Permutation& b);

/// Product of a sequence in the pinned order: gens[0] * gens[1] * ... .
Permutation product(std::span<const Permutation> perms, std::size_t degree);

/// Multiset of cycle lengths, fixed points included, sorted descending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  std::int64_t degree() const noexcept;
  /// Sum of (len - 1) over the parts.
  std::int64_t ramification() const noexcept;
  /// lcm of the parts.
  std::int64_t lcm() const noexcept;
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

CycleType cycle_type(const Permutation& p);

/// Partition of the index space [0, num_points) into orbits of the action
/// `act(generator, point)`. Orbits are sorted internally and ordered by their
/// least point. Used for grids and encoded tuple spaces that are never
/// materialized as permutations.
using Action = std::function<std::uint64_t(std::size_t, std::uint64_t)>;

std::vector<std::vector<std::uint64_t>> action_orbits(std::uint64_t num_points,
                                                      std::size_t num_gens,
                                                      const Action& act);

/// Orbit of one seed under the action, sorted. Throws BudgetExceeded once
/// more than `budget` points are reached.
std::vector<std::uint64_t> action_orbit(std::uint64_t seed, std::size_t num_gens,
                                        const Action& act, std::uint64_t budget);

/// Orbits of <gens> on {0..degree-1}, as above.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree);

bool is_transitive(std::span<const Permutation> gens, std::size_t degree);

inline constexpr std::uint64_t kDefaultGroupOrderCap = 10'000'000;

/// Order of <gens>, computed from a base and strong generating set
/// (deterministic Schreier-Sims). Throws OrderExceedsCap if the order is
/// larger than `cap`.
Integer group_order(std::span<const Permutation> gens, std::size_t degree,
                    const Integer& cap = kDefaultGroupOrderCap);

}  // namespace cover_genus

#endif  // COVER_GENUS_PERM_HPP
