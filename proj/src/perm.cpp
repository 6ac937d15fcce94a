#include "cover_genus/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "cover_genus/error.hpp"

namespace cover_genus {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) {
      throw Error(ErrorKind::InvalidPermutation, "images do not form a bijection");
    }
    seen[x] = true;
  }
  Permutation p(0);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::int64_t>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::int64_t x = cycle[i];
      if (x < 1 || static_cast<std::size_t>(x) > degree) {
        throw Error(ErrorKind::InvalidPermutation,
                    "point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
      }
      if (used[x - 1]) {
        throw Error(ErrorKind::InvalidPermutation,
                    "point " + std::to_string(x) + " occurs in two cycles");
      }
      used[x - 1] = true;
      const std::int64_t y = cycle[(i + 1) % cycle.size()];
      if (y < 1 || static_cast<std::size_t>(y) > degree) {
        throw Error(ErrorKind::InvalidPermutation,
                    "point " + std::to_string(y) + " outside 1.." + std::to_string(degree));
      }
      images[x - 1] = static_cast<Point>(y - 1);
    }
  }
  return from_images(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<std::int64_t>> cycles) {
  std::vector<std::vector<std::int64_t>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::vector<std::vector<std::int64_t>> Permutation::cycles() const {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::int64_t> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<std::int64_t>(x) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot compose degree " + std::to_string(p.degree()) +
                                               " with degree " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p(q(static_cast<Point>(x)));
  return Permutation::from_images(std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a * b * a.inverse() * b.inverse();
}

Permutation product(std::span<const Permutation> perms, std::size_t degree) {
  Permutation out(degree);
  for (const auto& p : perms) out = out * p;
  return out;
}

CycleType::CycleType(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t CycleType::degree() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t CycleType::ramification() const noexcept {
  std::int64_t r = 0;
  for (auto len : parts_) r += len - 1;
  return r;
}

std::int64_t CycleType::lcm() const noexcept {
  std::int64_t l = 1;
  for (auto len : parts_) l = std::lcm(l, len);
  return l;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << '}';
  return os.str();
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::int64_t> parts;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::int64_t len = 0;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::vector<std::vector<std::uint64_t>> action_orbits(std::uint64_t num_points,
                                                      std::size_t num_gens,
                                                      const Action& act) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<bool> seen(num_points, false);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < num_points; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> orbit{start};
    seen[start] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::uint64_t x = stack.back();
      stack.pop_back();
      for (std::size_t g = 0; g < num_gens; ++g) {
        const std::uint64_t y = act(g, x);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::uint64_t> action_orbit(std::uint64_t seed, std::size_t num_gens,
                                        const Action& act, std::uint64_t budget) {
  std::unordered_set<std::uint64_t> seen{seed};
  std::vector<std::uint64_t> orbit{seed};
  std::vector<std::uint64_t> stack{seed};
  while (!stack.empty()) {
    const std::uint64_t x = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < num_gens; ++g) {
      const std::uint64_t y = act(g, x);
      if (seen.insert(y).second) {
        if (orbit.size() >= budget) {
          throw Error(ErrorKind::BudgetExceeded,
                      "orbit exceeds budget of " + std::to_string(budget) + " points");
        }
        orbit.push_back(y);
        stack.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

namespace {

void check_degrees(std::span<const Permutation> gens, std::size_t degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                 " in a group of degree " +
                                                 std::to_string(degree));
    }
  }
}

}  // namespace

std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree) {
  check_degrees(gens, degree);
  const auto raw = action_orbits(degree, gens.size(), [&](std::size_t g, std::uint64_t x) {
    return static_cast<std::uint64_t>(gens[g](static_cast<Point>(x)));
  });
  std::vector<std::vector<Point>> out;
  out.reserve(raw.size());
  for (const auto& orbit : raw) out.emplace_back(orbit.begin(), orbit.end());
  return out;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  return orbits(gens, degree).size() == 1;
}

namespace {

// Base and strong generating set built by the deterministic Schreier-Sims
// procedure. Level l keeps S^(l), the strong generators fixing the first l
// base points, and a transversal u[b] with u[b](base[l]) = b over the basic
// orbit. The product of the current basic orbit sizes never exceeds the
// group order, so it can be compared with a cap while the chain grows.
class StabilizerChain {
 public:
  StabilizerChain(std::span<const Permutation> gens, std::size_t degree, const Integer& cap)
      : degree_(degree) {
    std::vector<Permutation> strong;
    for (const auto& g : gens) {
      if (!g.is_identity()) strong.push_back(g);
    }
    if (strong.empty()) return;
    for (const auto& s : strong) {
      if (fixes_base(s, base_.size())) add_base_point(first_moved(s));
    }
    for (std::size_t l = 0; l < base_.size(); ++l) {
      for (const auto& s : strong) {
        if (fixes_base(s, l)) gens_[l].push_back(s);
      }
      rebuild_orbit(l);
    }
    check_cap(cap);

    std::size_t i = base_.size();
    while (i > 0) {
      const std::size_t level = i - 1;
      bool extended = false;
      for (Point b = 0; b < degree_ && !extended; ++b) {
        if (!transversal_[level][b]) continue;
        for (std::size_t s = 0; s < gens_[level].size(); ++s) {
          const Permutation gen = gens_[level][s];
          const Permutation schreier =
              transversal_[level][gen(b)]->inverse() * gen * *transversal_[level][b];
          auto [residue, failed_at] = sift(schreier, level + 1);
          if (residue.is_identity()) continue;
          if (failed_at == base_.size()) add_base_point(first_moved(residue));
          for (std::size_t l = level + 1; l <= failed_at; ++l) {
            gens_[l].push_back(residue);
            rebuild_orbit(l);
          }
          check_cap(cap);
          i = failed_at + 1;
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
  }

  Integer order() const {
    Integer out = 1;
    for (const auto& level : transversal_) {
      std::size_t n = 0;
      for (const auto& t : level) n += t.has_value();
      out *= n;
    }
    return out;
  }

 private:
  bool fixes_base(const Permutation& g, std::size_t count) const {
    for (std::size_t l = 0; l < count; ++l) {
      if (g(base_[l]) != base_[l]) return false;
    }
    return true;
  }

  static Point first_moved(const Permutation& g) {
    Point x = 0;
    while (g(x) == x) ++x;
    return x;
  }

  void add_base_point(Point b) {
    base_.push_back(b);
    gens_.emplace_back();
    transversal_.emplace_back(degree_);
    transversal_.back()[b] = Permutation(degree_);
  }

  void rebuild_orbit(std::size_t l) {
    auto& t = transversal_[l];
    std::fill(t.begin(), t.end(), std::nullopt);
    t[base_[l]] = Permutation(degree_);
    std::deque<Point> queue{base_[l]};
    while (!queue.empty()) {
      const Point b = queue.front();
      queue.pop_front();
      for (const auto& gen : gens_[l]) {
        const Point c = gen(b);
        if (!t[c]) {
          t[c] = gen * *t[b];
          queue.push_back(c);
        }
      }
    }
  }

  // Strips g through levels >= from. Returns the residue and the level at
  // which stripping stopped (base_.size() when it ran through every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < base_.size(); ++l) {
      const Point image = g(base_[l]);
      if (!transversal_[l][image]) return {std::move(g), l};
      g = transversal_[l][image]->inverse() * g;
    }
    return {std::move(g), base_.size()};
  }

  void check_cap(const Integer& cap) const {
    if (order() > cap) {
      throw Error(ErrorKind::OrderExceedsCap, "group order exceeds cap " + cap.str());
    }
  }

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<std::vector<Permutation>> gens_;
  std::vector<std::vector<std::optional<Permutation>>> transversal_;
};

}  // namespace

Integer group_order(std::span<const Permutation> gens, std::size_t degree, const Integer& cap) {
  check_degrees(gens, degree);
  return StabilizerChain(gens, degree, cap).order();
}

}  // namespace cover_genus
