#include "cover_genus/json_io.hpp"

#include <limits>

#include "cover_genus/error.hpp"

namespace cover_genus {

namespace {

// Integers that fit are emitted as JSON numbers, larger ones as strings.
Json integer_json(const Integer& z) {
  if (z <= std::numeric_limits<std::int64_t>::max() &&
      z >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

Json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Json perm_to_json(const Permutation& p) {
  Json out = Json::array();
  for (const auto& c : p.cycles()) out.push_back(c);
  return out;
}

Permutation perm_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "permutation must be a list of cycles");
  std::vector<std::vector<std::int64_t>> cycles;
  for (const auto& c : j) {
    if (!c.is_array()) throw Error(ErrorKind::Parse, "cycle must be a list of integers");
    std::vector<std::int64_t> cycle;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw Error(ErrorKind::Parse, "cycle entries must be integers");
      cycle.push_back(x.get<std::int64_t>());
    }
    cycles.push_back(std::move(cycle));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json to_json(const HurwitzSystem& h) {
  Json j;
  j["degree"] = h.degree;
  j["base_genus"] = h.base_genus;
  j["branch_points"] = Json::array();
  for (const auto& bp : h.branch_points) {
    Json b;
    b["label"] = bp.label;
    b["perm"] = perm_to_json(bp.perm);
    j["branch_points"].push_back(std::move(b));
  }
  j["handles"] = Json::array();
  for (const auto& hd : h.handles) {
    Json x;
    x["a"] = perm_to_json(hd.a);
    x["b"] = perm_to_json(hd.b);
    j["handles"].push_back(std::move(x));
  }
  return j;
}

HurwitzSystem hurwitz_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "covering must be a JSON object");
  HurwitzSystem h;
  try {
    const auto deg = j.at("degree").get<std::int64_t>();
    if (deg < 1) throw Error(ErrorKind::Parse, "degree must be positive");
    h.degree = static_cast<std::size_t>(deg);
    h.base_genus = j.value("base_genus", std::int64_t{0});
    if (h.base_genus < 0) throw Error(ErrorKind::Parse, "base_genus must be nonnegative");
    for (const auto& b : j.value("branch_points", Json::array())) {
      h.branch_points.push_back({b.at("label").get<std::string>(), perm_from_json(b.at("perm"), h.degree)});
    }
    for (const auto& x : j.value("handles", Json::array())) {
      h.handles.push_back({perm_from_json(x.at("a"), h.degree), perm_from_json(x.at("b"), h.degree)});
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return h;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize(const HurwitzSystem& h) { return dump(to_json(h)); }

HurwitzSystem parse_hurwitz(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return hurwitz_from_json(j);
}

Json to_json(const CycleType& t) { return t.parts(); }

Json to_json(const Orbifold& o) {
  Json j;
  j["base_genus"] = o.base_genus;
  j["indices"] = Json::array();
  for (const auto& [label, nu] : o.indices) {
    Json e;
    e["label"] = label;
    e["nu"] = nu;
    j["indices"].push_back(std::move(e));
  }
  return j;
}

Json to_json(const FiberProductDecomposition& d, std::int64_t abhyankar_total) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["deg_p"] = d.deg_p;
  j["deg_w"] = d.deg_w;
  j["n_components"] = d.size();
  j["chi_total"] = d.chi_total();
  j["abhyankar_chi_total"] = abhyankar_total;
  j["components"] = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = d.components[i];
    Json e;
    e["index"] = i + 1;
    e["degree"] = c.covering.degree;
    e["deg_v"] = c.deg_v;
    e["deg_u"] = c.deg_u;
    e["genus"] = c.genus;
    e["chi"] = c.chi;
    e["orbit_key"] = c.orbit_key;
    e["off_diagonal"] = c.off_diagonal;
    e["passport"] = Json::array();
    for (const auto& lt : passport(c.covering)) {
      Json p;
      p["label"] = lt.label;
      p["cycle_type"] = to_json(lt.type);
      e["passport"].push_back(std::move(p));
    }
    j["components"].push_back(std::move(e));
  }
  return j;
}

Json to_json(const NormalizationData& n, bool galois) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["mon_order"] = integer_json(n.mon_order);
  j["orbifold"] = to_json(n.orbifold);
  j["orbifold_chi"] = rational_json(orbifold_chi(n.orbifold));
  j["chi_n"] = integer_json(n.chi_n);
  j["genus_n"] = n.genus_n;
  j["galois"] = galois;
  if (n.explicit_cover) {
    Json e;
    e["degree"] = n.explicit_cover->degree;
    e["genus"] = genus(*n.explicit_cover);
    j["explicit_cover"] = std::move(e);
  } else {
    j["explicit_cover"] = nullptr;
  }
  return j;
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["context"] = c.context;
  j["applicable"] = c.applicable;
  j["skipped"] = c.skipped;
  j["reason"] = c.reason;
  if (c.applicable) {
    j["lhs"] = rational_json(c.lhs);
    j["relation"] = std::string(to_string(c.relation));
    j["rhs"] = rational_json(c.rhs);
    j["strict"] = c.strict();
    j["holds"] = c.holds;
  } else {
    j["lhs"] = nullptr;
    j["relation"] = nullptr;
    j["rhs"] = nullptr;
    j["strict"] = nullptr;
    j["holds"] = nullptr;
  }
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["failed"] = r.any_failed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

Json to_json(const FuzzSummary& s) {
  Json j;
  j["format_version"] = kFormatVersion;
  Json cfg;
  cfg["seed"] = s.config.seed;
  cfg["trials"] = s.config.trials;
  cfg["max_degree"] = s.config.max_degree;
  cfg["max_branch"] = s.config.max_branch;
  cfg["base_genus_range"] = {s.config.min_base_genus, s.config.max_base_genus};
  cfg["group_order_cap"] = integer_json(s.config.group_order_cap);
  cfg["tuple_budget"] = s.config.tuple_budget;
  j["config"] = std::move(cfg);
  j["trials_run"] = s.trials_run;
  j["failed"] = s.any_failed();
  j["checks"] = Json::object();
  for (const auto& [name, k] : s.checks) {
    Json e;
    e["evaluated"] = k.evaluated;
    e["applicable"] = k.applicable;
    e["holds"] = k.holds;
    e["failed"] = k.failed;
    e["inapplicable"] = k.inapplicable;
    e["skipped"] = k.skipped;
    e["reasons"] = Json::object();
    for (const auto& [reason, count] : k.reasons) e["reasons"][reason] = count;
    j["checks"][name] = std::move(e);
  }
  j["failures"] = Json::array();
  for (const auto& f : s.failures) {
    Json e;
    e["trial"] = f.trial;
    e["check"] = f.check;
    e["context"] = f.context;
    j["failures"].push_back(std::move(e));
  }
  return j;
}

}  // namespace cover_genus
