#ifndef COVER_GENUS_COVERING_HPP
#define COVER_GENUS_COVERING_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cover_genus/exact.hpp"
#include "cover_genus/perm.hpp"

namespace cover_genus {

struct BranchPoint {
  std::string label;
  Permutation perm;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

struct Handle {
  Permutation a;
  Permutation b;

  friend bool operator==(const Handle&, const Handle&) = default;
};

/// A branched covering E -> C of a genus-g base, described by monodromy.
///
/// The relation is [a_1,b_1]...[a_g,b_g] s_1 ... s_r = 1 under the
/// right-to-left product of `Permutation`. Branch labels are opaque strings
/// naming points of the base; no coordinates are stored.
///
/// A system is "aligned" when identity branch permutations are allowed (so two
/// coverings can share one label list) and "canonical" when they are removed.
struct HurwitzSystem {
  std::size_t degree = 1;
  std::int64_t base_genus = 0;
  std::vector<BranchPoint> branch_points;
  std::vector<Handle> handles;

  /// Every handle and branch permutation, handles first (a_1, b_1, ...).
  std::vector<Permutation> generators() const;
  std::vector<std::string> labels() const;

  friend bool operator==(const HurwitzSystem&, const HurwitzSystem&) = default;
};

/// Checks degree, relation, transitivity and label uniqueness. Throws
/// DegreeMismatch, RelationViolated, NotTransitive or DuplicateLabel.
/// `check_transitive = false` is used for component systems that are
/// connected by construction.
const HurwitzSystem& validate(const HurwitzSystem& h, bool check_transitive = true);

/// Copy of `h` with identity branch permutations removed.
HurwitzSystem canonical(const HurwitzSystem& h);

/// True when the two systems describe the same labelled data after removing
/// identity branch points.
bool same_covering(const HurwitzSystem& lhs, const HurwitzSystem& rhs);

/// 2 - 2g of the base surface.
std::int64_t base_chi(std::int64_t base_genus);

/// Riemann-Hurwitz: chi(E) = chi(C) deg - sum over branch cycles (len - 1).
std::int64_t euler_characteristic(const HurwitzSystem& h);

/// g with chi(E) = 2 - 2g. Throws InternalParity if chi is odd or g < 0.
std::int64_t genus(const HurwitzSystem& h);

std::int64_t genus_from_chi(std::int64_t chi);

struct LabelledCycleType {
  std::string label;
  CycleType type;

  friend bool operator==(const LabelledCycleType&, const LabelledCycleType&) = default;
};

/// Cycle type per label, identity labels omitted.
std::vector<LabelledCycleType> passport(const HurwitzSystem& h);

/// Labels whose permutation is not the identity.
std::set<std::string> critical_values(const HurwitzSystem& h);

/// Only points with index >= 2 are stored, in branch-list order.
struct Orbifold {
  std::int64_t base_genus = 0;
  std::vector<std::pair<std::string, std::int64_t>> indices;

  friend bool operator==(const Orbifold&, const Orbifold&) = default;
};

/// nu(z) = lcm of the cycle lengths over z.
Orbifold ramification_orbifold(const HurwitzSystem& h);

/// (2 - 2g) + sum (1/nu - 1).
Rational orbifold_chi(const Orbifold& o);

}  // namespace cover_genus

#endif  // COVER_GENUS_COVERING_HPP
