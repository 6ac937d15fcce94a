// cover-genus: command line front end.
//
// Exit status: 0 on success, 1 when verify or fuzz finds a failed check,
// 2 on invalid input or any other error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cover_genus/bounds.hpp"
#include "cover_genus/error.hpp"
#include "cover_genus/harness.hpp"
#include "cover_genus/json_io.hpp"

using namespace cover_genus;

namespace {

struct Options {
  std::string p, w, v, a;
  std::size_t k = 2;
  std::string fixture_name;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10'000;
  std::size_t max_degree = 6;
  std::size_t max_branch = 5;
  std::int64_t min_base_genus = 0;
  std::int64_t max_base_genus = 2;
  unsigned jobs = 0;
  std::string group_order_cap;
  std::uint64_t tuple_budget = 0;
  std::string format = "json";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path, or "fixture:NAME" / "fixture:NAME:p" / "fixture:NAME:w".
HurwitzSystem load(const std::string& source, const char* flag) {
  if (source.empty()) throw Error(ErrorKind::Parse, std::string("missing ") + flag);
  const std::string prefix = "fixture:";
  if (source.rfind(prefix, 0) != 0) return parse_hurwitz(read_file(source));
  std::string name = source.substr(prefix.size());
  std::string side;
  if (name.size() > 2 && (name.ends_with(":p") || name.ends_with(":w"))) {
    side = name.substr(name.size() - 1);
    name.resize(name.size() - 2);
  }
  const auto value = fixture(name);
  if (const auto* h = std::get_if<HurwitzSystem>(&value)) {
    if (!side.empty()) throw Error(ErrorKind::UnknownFixture, name + " is a single covering");
    return *h;
  }
  const auto& pair = std::get<AlignedPair>(value);
  if (side.empty()) {
    throw Error(ErrorKind::UnknownFixture, name + " is a pair; select it with :p or :w");
  }
  return side == "p" ? pair.p : pair.w;
}

std::uint64_t tuple_budget(const Options& o) {
  if (o.tuple_budget != 0) return o.tuple_budget;
  if (const char* env = std::getenv("COVER_GENUS_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto b = std::stoull(env, &used);
      if (used == std::string(env).size() && b > 0) return b;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, std::string("COVER_GENUS_BUDGET must be a positive integer, got '") +
                                      env + "'");
  }
  return kDefaultTupleBudget;
}

Integer group_cap(const Options& o) {
  if (o.group_order_cap.empty()) return kDefaultGroupOrderCap;
  try {
    const Integer cap(o.group_order_cap);
    if (cap > 0) return cap;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "--group-order-cap must be a positive integer");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + o.out + "'");
  f << text;
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream s;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    s << line << "\n";
  }
  return s.str();
}

std::string text_passport(const HurwitzSystem& h) {
  std::string s;
  for (const auto& lt : passport(h)) s += (s.empty() ? "" : " ") + lt.label + ":" + lt.type.to_string();
  return s.empty() ? "-" : s;
}

std::string decomposition_text(const FiberProductDecomposition& d, std::int64_t gcd_total,
                               bool show_uv) {
  std::vector<std::vector<std::string>> rows;
  if (show_uv) {
    rows.push_back({"#", "degree", "deg_V", "deg_U", "genus", "chi", "key", "passport"});
  } else {
    rows.push_back({"#", "degree", "genus", "chi", "key", "passport"});
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = d.components[i];
    if (show_uv) {
      rows.push_back({std::to_string(i + 1), std::to_string(c.covering.degree),
                      std::to_string(c.deg_v), std::to_string(c.deg_u), std::to_string(c.genus),
                      std::to_string(c.chi), std::to_string(c.orbit_key),
                      text_passport(c.covering)});
    } else {
      rows.push_back({std::to_string(i + 1), std::to_string(c.covering.degree),
                      std::to_string(c.genus), std::to_string(c.chi), std::to_string(c.orbit_key),
                      text_passport(c.covering)});
    }
  }
  std::ostringstream s;
  s << d.size() << " component(s), chi total " << d.chi_total();
  if (show_uv) s << ", gcd formula " << gcd_total;
  s << "\n" << table(rows);
  return s.str();
}

int cmd_decompose(const Options& o) {
  const auto p = load(o.p, "--p"), w = load(o.w, "--w");
  validate(p);
  validate(w);
  const auto pair = align(p, w);
  const auto d = fiber_product(pair);
  const auto total = abhyankar_chi_total(pair);
  emit(o, o.format == "json" ? dump(to_json(d, total)) : decomposition_text(d, total, true));
  return 0;
}

int cmd_self_product(const Options& o) {
  const auto v = load(o.v, "--v");
  validate(v);
  const auto d = self_product_offdiagonal(v, o.k, tuple_budget(o));
  if (o.format == "text") {
    emit(o, "k = " + std::to_string(o.k) + ", " + decomposition_text(d, 0, false));
    return 0;
  }
  Json j;
  j["format_version"] = kFormatVersion;
  j["degree"] = v.degree;
  j["k"] = o.k;
  j["n_components"] = d.size();
  j["min_genus"] = nullptr;
  if (d.size() > 0) {
    std::int64_t m = d.components.front().genus;
    for (const auto& c : d.components) m = std::min(m, c.genus);
    j["min_genus"] = m;
  }
  j["components"] = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = d.components[i];
    Json e;
    e["index"] = i + 1;
    e["degree"] = c.covering.degree;
    e["genus"] = c.genus;
    e["chi"] = c.chi;
    e["orbit_key"] = c.orbit_key;
    j["components"].push_back(std::move(e));
  }
  emit(o, dump(j));
  return 0;
}

int cmd_normalize(const Options& o) {
  const auto v = load(o.v, "--v");
  validate(v);
  const auto n = normalize(v, group_cap(o), tuple_budget(o));
  const bool galois = n.mon_order == v.degree;
  if (o.format == "json") {
    emit(o, dump(to_json(n, galois)));
    return 0;
  }
  std::string indices;
  for (const auto& [label, nu] : n.orbifold.indices) {
    indices += (indices.empty() ? "" : " ") + label + ":" + std::to_string(nu);
  }
  emit(o, table({{"|Mon|", to_string(n.mon_order)},
                 {"galois", galois ? "yes" : "no"},
                 {"orbifold", indices.empty() ? "-" : indices},
                 {"orbifold chi", to_string(orbifold_chi(n.orbifold))},
                 {"chi(N)", to_string(n.chi_n)},
                 {"g(N)", std::to_string(n.genus_n)},
                 {"explicit", n.explicit_cover ? "degree " + std::to_string(n.explicit_cover->degree) +
                                                     ", genus " +
                                                     std::to_string(genus(*n.explicit_cover))
                                               : "over budget"}}));
  return 0;
}

int cmd_tame(const Options& o) {
  const auto a = load(o.a, "--a");
  validate(a);
  const auto t = is_tame(a, tuple_budget(o));
  if (o.format == "text") {
    std::string s = t.tame ? "tame\n" : "wild\n";
    if (t.witness) {
      s += "witness: off-diagonal component of degree " +
           std::to_string(t.witness->covering.degree) + ", genus " +
           std::to_string(t.witness->genus) + ", key " + std::to_string(t.witness->orbit_key) +
           "\n";
    }
    emit(o, s);
    return 0;
  }
  Json j;
  j["format_version"] = kFormatVersion;
  j["tame"] = t.tame;
  j["witness"] = nullptr;
  if (t.witness) {
    Json w;
    w["degree"] = t.witness->covering.degree;
    w["genus"] = t.witness->genus;
    w["orbit_key"] = t.witness->orbit_key;
    j["witness"] = std::move(w);
  }
  emit(o, dump(j));
  return 0;
}

std::string check_text(const std::vector<Check>& checks) {
  std::vector<std::vector<std::string>> rows{{"check", "context", "status", "detail"}};
  for (const auto& c : checks) {
    std::string status, detail;
    if (c.skipped) {
      status = "skipped";
      detail = c.reason;
    } else if (!c.applicable) {
      status = "n/a";
      detail = c.reason;
    } else {
      status = c.holds ? "holds" : "FAILED";
      detail = to_string(c.lhs) + " " + std::string(to_string(c.relation)) + " " + to_string(c.rhs);
    }
    rows.push_back({c.name, c.context, status, detail});
  }
  return table(rows);
}

int cmd_verify(const Options& o) {
  const auto p = load(o.p, "--p"), w = load(o.w, "--w");
  const auto r = verify_all(p, w, VerifyConfig{group_cap(o), tuple_budget(o)});
  emit(o, o.format == "json" ? dump(to_json(r)) : check_text(r.checks));
  return r.any_failed() ? 1 : 0;
}

int cmd_fuzz(const Options& o) {
  FuzzConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.max_degree = o.max_degree;
  cfg.max_branch = o.max_branch;
  cfg.min_base_genus = o.min_base_genus;
  cfg.max_base_genus = o.max_base_genus;
  cfg.group_order_cap = group_cap(o);
  cfg.tuple_budget = tuple_budget(o);
  if (cfg.max_degree < 1) throw Error(ErrorKind::Parse, "--max-degree must be at least 1");
  if (cfg.min_base_genus < 0 || cfg.max_base_genus < cfg.min_base_genus) {
    throw Error(ErrorKind::Parse, "invalid base genus range");
  }
  const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto s = fuzz(cfg, jobs);
  if (o.format == "json") {
    emit(o, dump(to_json(s)));
  } else {
    std::vector<std::vector<std::string>> rows{
        {"check", "evaluated", "applicable", "holds", "failed", "n/a", "skipped"}};
    for (const auto& [name, k] : s.checks) {
      rows.push_back({name, std::to_string(k.evaluated), std::to_string(k.applicable),
                      std::to_string(k.holds), std::to_string(k.failed),
                      std::to_string(k.inapplicable), std::to_string(k.skipped)});
    }
    std::string text = "seed " + std::to_string(cfg.seed) + ", " + std::to_string(s.trials_run) +
                       " trials, " + std::to_string(s.failures.size()) + " failure(s)\n" +
                       table(rows);
    for (const auto& f : s.failures) {
      text += "FAILED trial " + std::to_string(f.trial) + ": " + f.check + " on " + f.context + "\n";
    }
    emit(o, text);
  }
  return s.any_failed() ? 1 : 0;
}

int cmd_fixture(const Options& o) {
  if (o.fixture_name.empty()) {
    std::string s = "families: power(n) chebyshev(n) zn_plus_inverse(n) hyperelliptic(g) dur(r,n)\n";
    s += "pinned pairs:";
    for (const auto& n : pinned_names()) s += " " + n;
    emit(o, s + "\n");
    return 0;
  }
  const auto value = fixture(o.fixture_name);
  if (const auto* h = std::get_if<HurwitzSystem>(&value)) {
    emit(o, serialize(*h));
  } else {
    const auto& pair = std::get<AlignedPair>(value);
    Json j;
    j["p"] = to_json(pair.p);
    j["w"] = to_json(pair.w);
    emit(o, dump(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus bounds for fiber products of branched coverings"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  const auto add_limits = [&](CLI::App* c) {
    c->add_option("--group-order-cap", o.group_order_cap, "Largest monodromy group order computed");
    c->add_option("--tuple-budget", o.tuple_budget,
                  "Largest injective tuple space enumerated (default: COVER_GENUS_BUDGET or 10^7)");
  };
  const std::string src = "Covering JSON file, or fixture:NAME (fixture:NAME:p / :w for pairs)";

  auto* decompose = app.add_subcommand("decompose", "Components of the fiber product of P and W");
  decompose->add_option("--p", o.p, src)->required();
  decompose->add_option("--w", o.w, src)->required();
  add_format(decompose);

  auto* self = app.add_subcommand("self-product", "Off-diagonal k-fold self product of V");
  self->add_option("--v", o.v, src)->required();
  self->add_option("--k", o.k, "Number of factors")->default_val(2);
  add_limits(self);
  add_format(self);

  auto* norm = app.add_subcommand("normalize", "Galois closure of V by both routes");
  norm->add_option("--v", o.v, src)->required();
  add_limits(norm);
  add_format(norm);

  auto* tame = app.add_subcommand("tame", "Tameness of A");
  tame->add_option("--a", o.a, src)->required();
  add_limits(tame);
  add_format(tame);

  auto* verify = app.add_subcommand("verify", "Evaluate every bound on the pair P, W");
  verify->add_option("--p", o.p, src)->required();
  verify->add_option("--w", o.w, src)->required();
  add_limits(verify);
  add_format(verify);

  auto* fz = app.add_subcommand("fuzz", "Run verify on seeded random pairs");
  fz->add_option("--seed", o.seed, "Corpus seed")->default_val(1);
  fz->add_option("--trials", o.trials, "Number of pairs")->default_val(10'000);
  fz->add_option("--max-degree", o.max_degree, "Largest degree of P and W")->default_val(6);
  fz->add_option("--max-branch", o.max_branch, "Largest number of branch points")->default_val(5);
  fz->add_option("--min-base-genus", o.min_base_genus)->default_val(0);
  fz->add_option("--max-base-genus", o.max_base_genus)->default_val(2);
  fz->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
  add_limits(fz);
  add_format(fz);

  auto* fx = app.add_subcommand("fixture", "Print a fixture as JSON, or list them");
  fx->add_option("name", o.fixture_name, "e.g. power(3), dur(1,2), generic4_x_double");
  fx->add_option("--out", o.out, "Write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decompose) return cmd_decompose(o);
    if (*self) return cmd_self_product(o);
    if (*norm) return cmd_normalize(o);
    if (*tame) return cmd_tame(o);
    if (*verify) return cmd_verify(o);
    if (*fz) return cmd_fuzz(o);
    if (*fx) return cmd_fixture(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
