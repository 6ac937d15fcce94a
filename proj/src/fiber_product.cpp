#include "cover_genus/fiber_product.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "cover_genus/error.hpp"

namespace cover_genus {

namespace {

std::vector<std::string> merge_labels(const std::vector<std::string>& lp,
                                      const std::vector<std::string>& lw) {
  const std::set<std::string> in_p(lp.begin(), lp.end());
  const std::set<std::string> in_w(lw.begin(), lw.end());
  std::vector<std::string> shared_p, shared_w;
  for (const auto& l : lp) {
    if (in_w.contains(l)) shared_p.push_back(l);
  }
  for (const auto& l : lw) {
    if (in_p.contains(l)) shared_w.push_back(l);
  }
  if (shared_p != shared_w) {
    throw Error(ErrorKind::LabelConflict,
                "shared branch labels occur in different orders in the two systems");
  }

  std::vector<std::string> merged;
  std::size_t ip = 0, iw = 0;
  for (const auto& anchor : shared_p) {
    for (; lp[ip] != anchor; ++ip) merged.push_back(lp[ip]);
    for (; lw[iw] != anchor; ++iw) merged.push_back(lw[iw]);
    merged.push_back(anchor);
    ++ip;
    ++iw;
  }
  for (; ip < lp.size(); ++ip) merged.push_back(lp[ip]);
  for (; iw < lw.size(); ++iw) merged.push_back(lw[iw]);
  return merged;
}

HurwitzSystem over_labels(const HurwitzSystem& h, const std::vector<std::string>& labels) {
  std::map<std::string, Permutation> perms;
  for (const auto& bp : h.branch_points) perms.emplace(bp.label, bp.perm);
  HurwitzSystem out{h.degree, h.base_genus, {}, h.handles};
  for (const auto& l : labels) {
    auto it = perms.find(l);
    out.branch_points.push_back({l, it == perms.end() ? Permutation(h.degree) : it->second});
  }
  return out;
}

// Restricts the action to one orbit (0-based codes, ascending) and packages
// it as a covering of the base. Local point i is orbit[i].
Component restrict_to_orbit(const std::vector<std::uint64_t>& orbit, const HurwitzSystem& shape,
                            std::size_t num_gens, const Action& act) {
  const std::size_t size = orbit.size();
  auto local = [&](std::uint64_t code) {
    auto it = std::lower_bound(orbit.begin(), orbit.end(), code);
    return static_cast<Point>(it - orbit.begin());
  };
  std::vector<Permutation> restricted;
  restricted.reserve(num_gens);
  for (std::size_t g = 0; g < num_gens; ++g) {
    std::vector<Point> images(size);
    for (std::size_t x = 0; x < size; ++x) images[x] = local(act(g, orbit[x]));
    restricted.push_back(Permutation::from_images(std::move(images)));
  }

  Component c;
  c.covering.degree = size;
  c.covering.base_genus = shape.base_genus;
  std::size_t g = 0;
  for (std::size_t h = 0; h < shape.handles.size(); ++h, g += 2) {
    c.covering.handles.push_back({restricted[g], restricted[g + 1]});
  }
  for (const auto& bp : shape.branch_points) {
    c.covering.branch_points.push_back({bp.label, restricted[g++]});
  }
  c.chi = euler_characteristic(c.covering);
  c.genus = genus_from_chi(c.chi);
  c.orbit_key = orbit.front() + 1;
  c.points.reserve(size);
  for (auto code : orbit) c.points.push_back(code + 1);
  return c;
}

void sort_components(std::vector<Component>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Component& a, const Component& b) {
    if (a.covering.degree != b.covering.degree) return a.covering.degree < b.covering.degree;
    return a.orbit_key < b.orbit_key;
  });
}

}  // namespace

AlignedPair align(const HurwitzSystem& p, const HurwitzSystem& w) {
  if (p.base_genus != w.base_genus || p.handles.size() != w.handles.size()) {
    throw Error(ErrorKind::BaseMismatch, "base genus " + std::to_string(p.base_genus) + " vs " +
                                             std::to_string(w.base_genus));
  }
  const auto labels = merge_labels(p.labels(), w.labels());
  return {over_labels(p, labels), over_labels(w, labels)};
}

bool is_aligned(const HurwitzSystem& p, const HurwitzSystem& w) {
  return p.base_genus == w.base_genus && p.handles.size() == w.handles.size() &&
         p.labels() == w.labels();
}

std::int64_t FiberProductDecomposition::chi_total() const {
  std::int64_t total = 0;
  for (const auto& c : components) total += c.chi;
  return total;
}

std::uint64_t encode_grid(std::size_t i, std::size_t j, std::size_t deg_w) {
  return static_cast<std::uint64_t>(i - 1) * deg_w + (j - 1) + 1;
}

std::pair<std::size_t, std::size_t> decode_grid(std::uint64_t code, std::size_t deg_w) {
  return {static_cast<std::size_t>((code - 1) / deg_w) + 1,
          static_cast<std::size_t>((code - 1) % deg_w) + 1};
}

FiberProductDecomposition fiber_product(const AlignedPair& pair) {
  if (!is_aligned(pair.p, pair.w)) {
    throw Error(ErrorKind::NotAligned, "systems do not share one label list; call align first");
  }
  const std::size_t dp = pair.p.degree;
  const std::size_t dw = pair.w.degree;
  const auto gp = pair.p.generators();
  const auto gw = pair.w.generators();
  const Action act = [&](std::size_t g, std::uint64_t x) {
    const Point i = static_cast<Point>(x / dw);
    const Point j = static_cast<Point>(x % dw);
    return static_cast<std::uint64_t>(gp[g](i)) * dw + gw[g](j);
  };

  FiberProductDecomposition out;
  out.deg_p = dp;
  out.deg_w = dw;
  for (const auto& orbit : action_orbits(dp * dw, gp.size(), act)) {
    Component c = restrict_to_orbit(orbit, pair.p, gp.size(), act);
    const std::size_t size = orbit.size();
    if (size % dp != 0 || size % dw != 0) {
      throw Error(ErrorKind::InternalConsistency,
                  "orbit of size " + std::to_string(size) + " not divisible by both degrees");
    }
    c.deg_v = static_cast<std::int64_t>(size / dp);
    c.deg_u = static_cast<std::int64_t>(size / dw);
    c.off_diagonal = !std::all_of(orbit.begin(), orbit.end(),
                                  [&](std::uint64_t x) { return x / dw == x % dw; });
    out.components.push_back(std::move(c));
  }
  sort_components(out.components);
  return out;
}

std::int64_t abhyankar_chi_total(const AlignedPair& pair) {
  if (!is_aligned(pair.p, pair.w)) {
    throw Error(ErrorKind::NotAligned, "systems do not share one label list; call align first");
  }
  const auto dp = static_cast<std::int64_t>(pair.p.degree);
  const auto dw = static_cast<std::int64_t>(pair.w.degree);
  std::int64_t r = 0;
  std::int64_t gcd_sum = 0;
  for (std::size_t i = 0; i < pair.p.branch_points.size(); ++i) {
    const Permutation& sp = pair.p.branch_points[i].perm;
    const Permutation& sw = pair.w.branch_points[i].perm;
    if (sp.is_identity() && sw.is_identity()) continue;
    ++r;
    const CycleType tp = cycle_type(sp), tw = cycle_type(sw);
    for (auto a : tp.parts()) {
      for (auto b : tw.parts()) gcd_sum += std::gcd(a, b);
    }
  }
  return (base_chi(pair.p.base_genus) - r) * dp * dw + gcd_sum;
}

InjectiveTupleSpace::InjectiveTupleSpace(std::size_t n, std::size_t k)
    : n_(n), k_(k), weights_(k) {
  if (k > n) throw Error(ErrorKind::KOutOfRange, "k exceeds n");
  const Integer total = falling_factorial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  size_ = total > kMax ? kMax : static_cast<std::uint64_t>(total);
  for (std::size_t i = 0; i < k; ++i) {
    const Integer w = falling_factorial(static_cast<std::int64_t>(n - i - 1),
                                        static_cast<std::int64_t>(k - i - 1));
    weights_[i] = w > kMax ? kMax : static_cast<std::uint64_t>(w);
  }
}

std::uint64_t InjectiveTupleSpace::rank(std::span<const Point> tuple) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    std::uint64_t digit = tuple[i];
    for (std::size_t j = 0; j < i; ++j) digit -= tuple[j] < tuple[i];
    r += digit * weights_[i];
  }
  return r;
}

std::vector<Point> InjectiveTupleSpace::unrank(std::uint64_t r) const {
  std::vector<Point> tuple(k_);
  std::vector<bool> used(n_, false);
  for (std::size_t i = 0; i < k_; ++i) {
    std::uint64_t digit = r / weights_[i];
    r %= weights_[i];
    Point x = 0;
    for (;; ++x) {
      if (used[x]) continue;
      if (digit == 0) break;
      --digit;
    }
    used[x] = true;
    tuple[i] = x;
  }
  return tuple;
}

std::uint64_t InjectiveTupleSpace::act(const Permutation& g, std::uint64_t r) const {
  auto tuple = unrank(r);
  for (auto& x : tuple) x = g(x);
  return rank(tuple);
}

FiberProductDecomposition self_product_offdiagonal(const HurwitzSystem& v, std::size_t k,
                                                   std::uint64_t budget) {
  if (k < 2 || k > v.degree) {
    throw Error(ErrorKind::KOutOfRange, "k = " + std::to_string(k) + " outside 2.." +
                                            std::to_string(v.degree));
  }
  const InjectiveTupleSpace space(v.degree, k);
  if (space.size() > budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(space.size()) +
                                               " injective tuples exceed budget " +
                                               std::to_string(budget));
  }
  const auto gens = v.generators();
  const Action act = [&](std::size_t g, std::uint64_t r) { return space.act(gens[g], r); };

  FiberProductDecomposition out;
  out.deg_p = v.degree;
  out.deg_w = v.degree;
  for (const auto& orbit : action_orbits(space.size(), gens.size(), act)) {
    Component c = restrict_to_orbit(orbit, v, gens.size(), act);
    c.deg_v = c.deg_u = static_cast<std::int64_t>(orbit.size() / v.degree);
    out.components.push_back(std::move(c));
  }
  sort_components(out.components);
  return out;
}

Component self_product_component(const HurwitzSystem& v, std::span<const Point> seed,
                                 std::uint64_t budget) {
  const std::size_t k = seed.size();
  if (k < 2 || k > v.degree) {
    throw Error(ErrorKind::KOutOfRange, "k = " + std::to_string(k) + " outside 2.." +
                                            std::to_string(v.degree));
  }
  std::vector<bool> used(v.degree, false);
  for (Point x : seed) {
    if (x >= v.degree || used[x]) {
      throw Error(ErrorKind::KOutOfRange, "seed is not an injective tuple");
    }
    used[x] = true;
  }
  const InjectiveTupleSpace space(v.degree, k);
  const auto gens = v.generators();
  const Action act = [&](std::size_t g, std::uint64_t r) { return space.act(gens[g], r); };
  const auto orbit = action_orbit(space.rank(seed), gens.size(), act, budget);
  Component c = restrict_to_orbit(orbit, v, gens.size(), act);
  c.deg_v = c.deg_u = static_cast<std::int64_t>(orbit.size() / v.degree);
  return c;
}

}  // namespace cover_genus
