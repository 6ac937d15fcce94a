#include "cover_genus/harness.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <optional>
#include <regex>
#include <thread>

#include "cover_genus/error.hpp"

namespace cover_genus {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = std::bit_ceil(bound) - 1;
  for (;;) {
    const std::uint64_t x = next() & mask;
    if (x < bound) return x;
  }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
}

Permutation Rng::permutation(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = degree; i-- > 1;) std::swap(images[i], images[uniform(i + 1)]);
  return Permutation::from_images(std::move(images));
}

HurwitzSystem random_hurwitz_system(Rng& rng, std::size_t degree, std::int64_t base_genus,
                                    const std::vector<std::string>& labels) {
  const bool need_nontrivial_last = base_genus == 0 && degree >= 2;
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    HurwitzSystem h{degree, base_genus, {}, {}};
    Permutation rel(degree);
    for (std::int64_t i = 0; i < base_genus; ++i) {
      Handle hd{rng.permutation(degree), rng.permutation(degree)};
      rel = rel * commutator(hd.a, hd.b);
      h.handles.push_back(std::move(hd));
    }
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
      h.branch_points.push_back({labels[i], rng.permutation(degree)});
      rel = rel * h.branch_points.back().perm;
    }
    if (labels.empty()) {
      if (!rel.is_identity()) continue;
    } else {
      h.branch_points.push_back({labels.back(), rel.inverse()});
      if (need_nontrivial_last && h.branch_points.back().perm.is_identity()) continue;
    }
    if (!is_transitive(h.generators(), degree)) continue;
    return h;
  }
  throw Error(ErrorKind::RetriesExhausted,
              "no transitive system of degree " + std::to_string(degree) + " over " +
                  std::to_string(labels.size()) + " branch points after " +
                  std::to_string(kGenerationRetries) + " attempts");
}

HurwitzSystem random_hurwitz_system(Rng& rng, std::size_t degree, std::int64_t base_genus,
                                    std::size_t branch_count) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= branch_count; ++i) labels.push_back("z" + std::to_string(i));
  return random_hurwitz_system(rng, degree, base_genus, labels);
}

namespace {

std::vector<std::int64_t> iota_cycle(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(last - first + 1));
  std::iota(c.begin(), c.end(), first);
  return c;
}

HurwitzSystem sphere_system(std::size_t degree,
                            std::vector<std::pair<std::string, Permutation>> points) {
  HurwitzSystem h{degree, 0, {}, {}};
  for (auto& [label, perm] : points) h.branch_points.push_back({label, std::move(perm)});
  return canonical(h);
}

// Degree-n map of the sphere with 2n - 2 simple branch points whose
// transpositions are (12)(12)(23)(23)...; monodromy is the full symmetric group.
HurwitzSystem generic_sphere_map(std::size_t n) {
  std::vector<std::pair<std::string, Permutation>> pts;
  for (std::size_t i = 1; i < n; ++i) {
    const auto t = Permutation::from_cycles(
        n, {{static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1)}});
    pts.emplace_back("b" + std::to_string(2 * i - 1), t);
    pts.emplace_back("b" + std::to_string(2 * i), t);
  }
  return sphere_system(n, std::move(pts));
}

}  // namespace

HurwitzSystem power_map(std::size_t n) {
  const auto c = Permutation::from_cycles(n, std::vector<std::vector<std::int64_t>>{iota_cycle(1, static_cast<std::int64_t>(n))});
  return sphere_system(n, {{"0", c}, {"inf", c.inverse()}});
}

HurwitzSystem chebyshev(std::size_t n) {
  std::vector<std::vector<std::int64_t>> odd, even;
  for (std::int64_t i = 1; i + 1 <= static_cast<std::int64_t>(n); i += 2) odd.push_back({i, i + 1});
  for (std::int64_t i = 2; i + 1 <= static_cast<std::int64_t>(n); i += 2) even.push_back({i, i + 1});
  const auto s1 = Permutation::from_cycles(n, odd);
  const auto s2 = Permutation::from_cycles(n, even);
  return sphere_system(n, {{"1", s1}, {"-1", s2}, {"inf", (s1 * s2).inverse()}});
}

HurwitzSystem zn_plus_inverse(std::size_t n) {
  // Left-regular action of the dihedral group of order 2n on its elements
  // s^f r^k, stored at index f n + k.
  const std::size_t deg = 2 * n;
  const auto index = [n](std::size_t f, std::size_t k) { return static_cast<Point>(f * n + k % n); };
  std::vector<Point> ls(deg), lsr(deg), lrinv(deg);
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t plus = f == 0 ? k + 1 : k + n - 1;   // k + (-1)^f
      const std::size_t minus = f == 0 ? k + n - 1 : k + 1;  // k - (-1)^f
      ls[index(f, k)] = index(1 - f, k);
      lsr[index(f, k)] = index(1 - f, plus);
      lrinv[index(f, k)] = index(f, minus);
    }
  }
  return sphere_system(deg, {{"1", Permutation::from_images(ls)},
                             {"-1", Permutation::from_images(lsr)},
                             {"inf", Permutation::from_images(lrinv)}});
}

HurwitzSystem hyperelliptic(std::int64_t g) {
  const auto t = Permutation::from_cycles(2, {{1, 2}});
  std::vector<std::pair<std::string, Permutation>> pts;
  for (std::int64_t i = 1; i <= 2 * g + 2; ++i) pts.emplace_back("b" + std::to_string(i), t);
  return sphere_system(2, std::move(pts));
}

AlignedPair dur(std::size_t r, std::size_t n) {
  const auto ri = static_cast<std::int64_t>(r);
  const auto ni = static_cast<std::int64_t>(n);
  const std::size_t deg = r + n;
  // Over 0: the zero of order r and the zero of order n. Over c: one simple
  // critical point joining the two cycles. Over inf: the pole of order r + n.
  const auto s0 = Permutation::from_cycles(deg, std::vector<std::vector<std::int64_t>>{iota_cycle(1, ri), iota_cycle(ri + 1, ri + ni)});
  const auto sc = Permutation::from_cycles(deg, {{ri, ri + ni}});
  const HurwitzSystem p = sphere_system(deg, {{"0", s0}, {"c", sc}, {"inf", (s0 * sc).inverse()}});
  return align(p, power_map(n));
}

std::vector<std::string> pinned_names() {
  return {"generic4_x_double", "generic5_x_line", "hyperelliptic2_x_cyclic3",
          "torus_double_x_line", "dur_1_2"};
}

AlignedPair pinned(const std::string& name) {
  if (name == "generic4_x_double") {
    // Tame degree-4 W; P is a double cover branched over two of W's points.
    const auto t = Permutation::from_cycles(2, {{1, 2}});
    return align(sphere_system(2, {{"b1", t}, {"b2", t}}), generic_sphere_map(4));
  }
  if (name == "generic5_x_line") {
    return align(HurwitzSystem{1, 0, {}, {}}, generic_sphere_map(5));
  }
  if (name == "hyperelliptic2_x_cyclic3") {
    const auto c = Permutation::from_cycles(3, {{1, 2, 3}});
    return align(sphere_system(3, {{"b1", c}, {"b2", c.inverse()}}), hyperelliptic(2));
  }
  if (name == "torus_double_x_line") {
    // Double cover of a torus branched at two points: genus 2 and Galois.
    const Permutation id2(2);
    const auto t = Permutation::from_cycles(2, {{1, 2}});
    HurwitzSystem w{2, 1, {{"q1", t}, {"q2", t}}, {{id2, id2}}};
    HurwitzSystem p{1, 1, {}, {{Permutation(1), Permutation(1)}}};
    return align(p, w);
  }
  if (name == "dur_1_2") return dur(1, 2);
  throw Error(ErrorKind::UnknownFixture, "no pinned instance named '" + name + "'");
}

FixtureValue fixture(const std::string& name) {
  static const std::regex one(R"(^\s*(\w+)\s*\(\s*(\d+)\s*\)\s*$)");
  static const std::regex two(R"(^\s*(\w+)\s*\(\s*(\d+)\s*,\s*(\d+)\s*(?:,[^)]*)?\)\s*$)");
  std::smatch m;
  if (std::regex_match(name, m, one)) {
    const std::string fn = m[1];
    const std::size_t n = std::stoul(m[2]);
    if (fn == "power" && n >= 1) return power_map(n);
    if (fn == "chebyshev" && n >= 1) return chebyshev(n);
    if (fn == "zn_plus_inverse" && n >= 1) return zn_plus_inverse(n);
    if (fn == "hyperelliptic") return hyperelliptic(static_cast<std::int64_t>(n));
  } else if (std::regex_match(name, m, two)) {
    const std::string fn = m[1];
    const std::size_t r = std::stoul(m[2]);
    const std::size_t n = std::stoul(m[3]);
    if (fn == "dur" && r >= 1 && n >= 1) return dur(r, n);
  } else {
    const auto names = pinned_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) return pinned(name);
  }
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

AlignedPair fuzz_instance(const FuzzConfig& config, std::uint64_t trial) {
  Rng rng(config.seed, trial);
  const std::int64_t g = rng.range(config.min_base_genus, config.max_base_genus);
  const auto max_deg = static_cast<std::int64_t>(config.max_degree);
  const auto dp = static_cast<std::size_t>(rng.range(1, max_deg));
  const auto dw = static_cast<std::size_t>(rng.range(1, max_deg));
  const std::int64_t lo = g == 0 ? 2 : 1;
  const std::int64_t hi = std::max(lo, static_cast<std::int64_t>(config.max_branch));
  const bool overlapping = rng.uniform(4) == 0;

  const std::int64_t total = rng.range(lo, hi);
  auto labels = [](std::int64_t first, std::int64_t last) {
    std::vector<std::string> out;
    for (std::int64_t i = first; i <= last; ++i) out.push_back("z" + std::to_string(i));
    return out;
  };
  std::vector<std::string> lp = labels(1, total), lw = labels(1, total);
  if (overlapping) {
    // P over a prefix, W over a suffix of the label range; align() inserts
    // identities where either map is unbranched.
    lp = labels(1, rng.range(lo, total));
    lw = labels(total - rng.range(lo, total) + 1, total);
  }
  HurwitzSystem p = random_hurwitz_system(rng, dp, g, lp);
  HurwitzSystem w = random_hurwitz_system(rng, dw, g, lw);
  return align(p, w);
}

void accumulate(FuzzSummary& summary, std::uint64_t trial, const BoundReport& report) {
  ++summary.trials_run;
  for (const auto& c : report.checks) {
    auto& k = summary.checks[c.name];
    ++k.evaluated;
    if (c.skipped) {
      ++k.skipped;
      ++k.reasons[c.reason];
    } else if (!c.applicable) {
      ++k.inapplicable;
      ++k.reasons[c.reason];
    } else if (c.holds) {
      ++k.applicable;
      ++k.holds;
    } else {
      ++k.applicable;
      ++k.failed;
      summary.failures.push_back({trial, c.name, c.context});
    }
  }
}

FuzzSummary fuzz(const FuzzConfig& config, unsigned jobs) {
  const VerifyConfig vc{config.group_order_cap, config.tuple_budget};
  std::vector<std::optional<BoundReport>> reports(config.trials);
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      try {
        const AlignedPair pair = fuzz_instance(config, t);
        reports[t] = verify_all(pair.p, pair.w, vc);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::RetriesExhausted) throw;
        reports[t] = BoundReport{{skipped("generation", "trial", e.what())}};
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || config.trials < 2) {
    run(0, config.trials);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    const std::uint64_t chunk = (config.trials + jobs - 1) / jobs;
    for (std::uint64_t begin = 0, i = 0; begin < config.trials; begin += chunk, ++i) {
      threads.emplace_back([&, begin, i] {
        try {
          run(begin, std::min(config.trials, begin + chunk));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  FuzzSummary summary;
  summary.config = config;
  for (std::uint64_t t = 0; t < config.trials; ++t) accumulate(summary, t, *reports[t]);
  return summary;
}

}  // namespace cover_genus
