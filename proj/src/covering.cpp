#include "cover_genus/covering.hpp"

#include <algorithm>

#include "cover_genus/error.hpp"

namespace cover_genus {

std::vector<Permutation> HurwitzSystem::generators() const {
  std::vector<Permutation> out;
  out.reserve(2 * handles.size() + branch_points.size());
  for (const auto& h : handles) {
    out.push_back(h.a);
    out.push_back(h.b);
  }
  for (const auto& bp : branch_points) out.push_back(bp.perm);
  return out;
}

std::vector<std::string> HurwitzSystem::labels() const {
  std::vector<std::string> out;
  out.reserve(branch_points.size());
  for (const auto& bp : branch_points) out.push_back(bp.label);
  return out;
}

const HurwitzSystem& validate(const HurwitzSystem& h, bool check_transitive) {
  if (h.degree < 1) throw Error(ErrorKind::DegreeMismatch, "degree must be positive");
  if (h.base_genus < 0) throw Error(ErrorKind::RelationViolated, "negative base genus");
  if (h.handles.size() != static_cast<std::size_t>(h.base_genus)) {
    throw Error(ErrorKind::RelationViolated,
                "base genus " + std::to_string(h.base_genus) + " needs as many handles, got " +
                    std::to_string(h.handles.size()));
  }
  for (std::size_t i = 0; i < h.handles.size(); ++i) {
    for (const auto* p : {&h.handles[i].a, &h.handles[i].b}) {
      if (p->degree() != h.degree) {
        throw Error(ErrorKind::DegreeMismatch,
                    "handle " + std::to_string(i + 1) + " has degree " +
                        std::to_string(p->degree()) + ", expected " + std::to_string(h.degree));
      }
    }
  }
  for (const auto& bp : h.branch_points) {
    if (bp.perm.degree() != h.degree) {
      throw Error(ErrorKind::DegreeMismatch, "branch point '" + bp.label + "' has degree " +
                                                 std::to_string(bp.perm.degree()) +
                                                 ", expected " + std::to_string(h.degree));
    }
  }
  std::vector<std::string> labels = h.labels();
  std::sort(labels.begin(), labels.end());
  if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end()) {
    throw Error(ErrorKind::DuplicateLabel, "label '" + *dup + "' occurs twice");
  }

  Permutation rel(h.degree);
  for (const auto& hd : h.handles) rel = rel * commutator(hd.a, hd.b);
  for (const auto& bp : h.branch_points) rel = rel * bp.perm;
  if (!rel.is_identity()) {
    throw Error(ErrorKind::RelationViolated,
                "product of commutators and branch permutations is " + rel.to_string());
  }
  if (check_transitive && !is_transitive(h.generators(), h.degree)) {
    throw Error(ErrorKind::NotTransitive,
                "generators have " + std::to_string(orbits(h.generators(), h.degree).size()) +
                    " orbits on " + std::to_string(h.degree) + " sheets");
  }
  return h;
}

HurwitzSystem canonical(const HurwitzSystem& h) {
  HurwitzSystem out = h;
  std::erase_if(out.branch_points, [](const BranchPoint& bp) { return bp.perm.is_identity(); });
  return out;
}

bool same_covering(const HurwitzSystem& lhs, const HurwitzSystem& rhs) {
  return canonical(lhs) == canonical(rhs);
}

std::int64_t base_chi(std::int64_t base_genus) { return 2 - 2 * base_genus; }

std::int64_t euler_characteristic(const HurwitzSystem& h) {
  std::int64_t chi = base_chi(h.base_genus) * static_cast<std::int64_t>(h.degree);
  for (const auto& bp : h.branch_points) chi -= cycle_type(bp.perm).ramification();
  return chi;
}

std::int64_t genus_from_chi(std::int64_t chi) {
  if (chi % 2 != 0 || chi > 2) {
    throw Error(ErrorKind::InternalParity,
                "Euler characteristic " + std::to_string(chi) + " is not 2 - 2g for g >= 0");
  }
  return 1 - chi / 2;
}

std::int64_t genus(const HurwitzSystem& h) { return genus_from_chi(euler_characteristic(h)); }

std::vector<LabelledCycleType> passport(const HurwitzSystem& h) {
  std::vector<LabelledCycleType> out;
  for (const auto& bp : h.branch_points) {
    if (!bp.perm.is_identity()) out.push_back({bp.label, cycle_type(bp.perm)});
  }
  return out;
}

std::set<std::string> critical_values(const HurwitzSystem& h) {
  std::set<std::string> out;
  for (const auto& bp : h.branch_points) {
    if (!bp.perm.is_identity()) out.insert(bp.label);
  }
  return out;
}

Orbifold ramification_orbifold(const HurwitzSystem& h) {
  Orbifold o{h.base_genus, {}};
  for (const auto& bp : h.branch_points) {
    const std::int64_t nu = cycle_type(bp.perm).lcm();
    if (nu > 1) o.indices.emplace_back(bp.label, nu);
  }
  return o;
}

Rational orbifold_chi(const Orbifold& o) {
  Rational chi = base_chi(o.base_genus);
  for (const auto& [label, nu] : o.indices) chi += Rational(1, nu) - 1;
  return chi;
}

}  // namespace cover_genus
