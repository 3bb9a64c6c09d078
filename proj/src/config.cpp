#include "tangency/config.hpp"

#include <fstream>
#include <sstream>

namespace tangency {

namespace {

// Coefficients are written as a plain scale or as {"scale": s, "pow": {base: power}}.
constexpr std::string_view kDefaultHenon = R"json({
  "a0": "1.3145271093265",
  "b0": "-0.3",
  "param_radius": 1e-5,
  "lambda": "3.858169402",
  "mu": "0.07775708341",
  "seed_u": "0.0001993152279412426",
  "seed_s": "2.50404e-11",
  "diameter_unit": 1e-5,
  "seed_backward_bound": 5.2e-5,
  "seed_forward_bound": 1.2e-5,
  "orbit_width_limit": 1e-8,
  "sets": [
    {"d": [7, 1, 2], "da": {"scale": 1, "pow": {"1.01": 8}}, "unstable": [0, 3],
     "q": [{"scale": 3, "pow": {"lambda": -2}}, {"scale": -1, "pow": {"mu": 2}},
           {"scale": -1, "pow": {"mu": 2, "lambda": -2}}, {"scale": 2, "pow": {"1.5": -8}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 7}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -0.5, {"scale": 2, "pow": {"1.5": -7}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 6}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -1, {"scale": 2, "pow": {"1.5": -6}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 5}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -1, {"scale": 2, "pow": {"1.5": -5}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 4}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -1, {"scale": 2, "pow": {"1.5": -4}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 3}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -1, {"scale": 2, "pow": {"1.5": -3}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 2}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -1, {"scale": 2, "pow": {"1.5": -2}}]},
    {"d": [1, 1, 2], "da": {"scale": 1, "pow": {"1.01": 1}}, "unstable": [0, 3],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, -1, {"scale": 2, "pow": {"1.5": -1}}]},
    {"d": [1, 1, 2], "da": 1, "unstable": [0, 3],
     "q": [{"scale": 0.5, "pow": {"lambda": -2}}, -1, -1, 2]},
    {"d": [0.5, 1.25, 0.25], "da": {"scale": 1, "pow": {"1.01": 1}}, "unstable": [0, 2],
     "q": [{"scale": 100, "pow": {"lambda": -2}}, -0.1, {"scale": 100, "pow": {"mu": 2, "lambda": -2}}, -2]},
    {"d": [0.75, 1.25, 0.25], "da": {"scale": 1, "pow": {"1.01": 2}}, "unstable": [0, 2],
     "q": [{"scale": 40, "pow": {"lambda": -2}}, -0.1, {"scale": 1, "pow": {"mu": 2, "lambda": -2}},
           {"scale": -2, "pow": {"1.5": -1}}]},
    {"d": [1, 1.25, 0.25], "da": {"scale": 1, "pow": {"1.01": 3}}, "unstable": [0, 2],
     "q": [{"scale": 10, "pow": {"lambda": -2}}, -0.1, {"scale": 1, "pow": {"mu": 2, "lambda": -2}},
           {"scale": -2, "pow": {"1.5": -2}}]},
    {"d": [1, 1.25, 0.25], "da": {"scale": 1, "pow": {"1.01": 4}}, "unstable": [0, 2],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, {"scale": 1, "pow": {"mu": 2, "lambda": -2}},
           {"scale": -2, "pow": {"1.5": -3}}]},
    {"d": [1, 1.25, 0.25], "da": {"scale": 1, "pow": {"1.01": 5}}, "unstable": [0, 2],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, {"scale": 1, "pow": {"mu": 2, "lambda": -2}},
           {"scale": -2, "pow": {"1.5": -4}}]},
    {"d": [1, 1.25, 0.25], "da": {"scale": 1, "pow": {"1.01": 6}}, "unstable": [0, 2],
     "q": [{"scale": 1, "pow": {"lambda": -2}}, -0.1, {"scale": 1, "pow": {"mu": 2, "lambda": -2}},
           {"scale": -2, "pow": {"1.5": -5}}]},
    {"d": [1, 2, 0.25], "da": {"scale": 1, "pow": {"1.01": 7}}, "unstable": [0, 2],
     "q": [{"scale": 0.3, "pow": {"lambda": -2}}, -0.1, {"scale": 1, "pow": {"mu": 2, "lambda": -2}},
           {"scale": -2, "pow": {"1.5": -6}}]}
  ]
})json";

using nlohmann::json;

Term term_from_json(const json& j) {
  Term t;
  if (j.is_number()) {
    t.scale = j.get<double>();
    return t;
  }
  if (!j.is_object() || !j.contains("scale")) throw ConfigError("coefficient must be a number or {scale, pow}");
  t.scale = j.at("scale").get<double>();
  if (j.contains("pow")) {
    for (const auto& [base, power] : j.at("pow").items()) t.powers.emplace_back(base, power.get<int>());
  }
  return t;
}

json term_to_json(const Term& t) {
  if (t.powers.empty()) return t.scale;
  json p = json::object();
  for (const auto& [base, power] : t.powers) p[base] = power;
  return json{{"scale", t.scale}, {"pow", p}};
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

Grid grid_from_json(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return Grid(4, j.get<std::size_t>());
  return j.get<Grid>();
}

AxisCorrespondence correspondence_from_json(const json& j) {
  AxisCorrespondence c;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3) throw ConfigError("correspondence entries are [source_axis, target_axis, sign]");
    c.push_back(AxisPair{p[0].get<std::size_t>(), p[1].get<std::size_t>(), p[2].get<int>()});
  }
  return c;
}

}  // namespace

std::string_view default_henon_config() { return kDefaultHenon; }

HenonProofData henon_data_from_json(const json& j) {
  try {
    HenonProofData d;
    d.a0 = j.at("a0").get<std::string>();
    d.b0 = j.at("b0").get<std::string>();
    d.param_radius = j.at("param_radius").get<double>();
    d.lambda = j.at("lambda").get<std::string>();
    d.mu = j.at("mu").get<std::string>();
    d.seed_u = j.at("seed_u").get<std::string>();
    d.seed_s = j.at("seed_s").get<std::string>();
    d.diameter_unit = get_or(j, "diameter_unit", d.diameter_unit);
    d.seed_backward_bound = get_or(j, "seed_backward_bound", d.seed_backward_bound);
    d.seed_forward_bound = get_or(j, "seed_forward_bound", d.seed_forward_bound);
    d.orbit_width_limit = get_or(j, "orbit_width_limit", d.orbit_width_limit);
    for (const auto& s : j.at("sets")) {
      HenonSetSpec spec;
      const auto& dj = s.at("d");
      const auto& qj = s.at("q");
      if (dj.size() != 3 || qj.size() != 4) throw ConfigError("each set needs 3 diameters and 4 form coefficients");
      for (std::size_t k = 0; k < 3; ++k) spec.diameters[k] = term_from_json(dj[k]);
      for (std::size_t k = 0; k < 4; ++k) spec.form[k] = term_from_json(qj[k]);
      spec.parameter_diameter = term_from_json(s.at("da"));
      spec.unstable_axes = s.at("unstable").get<std::vector<std::size_t>>();
      d.sets.push_back(std::move(spec));
    }
    // Validate numeric literals early.
    for (const auto* lit : {&d.a0, &d.b0, &d.lambda, &d.mu, &d.seed_u, &d.seed_s}) (void)Interval::from_decimal(*lit);
    return d;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid Henon data: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid Henon data: ") + e.what());
  }
}

json henon_data_to_json(const HenonProofData& d) {
  json sets = json::array();
  for (const auto& s : d.sets) {
    json dj = json::array();
    for (const auto& t : s.diameters) dj.push_back(term_to_json(t));
    json qj = json::array();
    for (const auto& t : s.form) qj.push_back(term_to_json(t));
    sets.push_back(json{{"d", dj}, {"da", term_to_json(s.parameter_diameter)}, {"unstable", s.unstable_axes}, {"q", qj}});
  }
  return json{{"a0", d.a0},
              {"b0", d.b0},
              {"param_radius", d.param_radius},
              {"lambda", d.lambda},
              {"mu", d.mu},
              {"seed_u", d.seed_u},
              {"seed_s", d.seed_s},
              {"diameter_unit", d.diameter_unit},
              {"seed_backward_bound", d.seed_backward_bound},
              {"seed_forward_bound", d.seed_forward_bound},
              {"orbit_width_limit", d.orbit_width_limit},
              {"sets", sets}};
}

void ProofConfig::validate() const {
  if (proof != "henon" && proof != "toy") throw ConfigError("unknown proof '" + proof + "' (expected henon or toy)");
  if (param_radius && !(*param_radius > 0.0 && *param_radius < 1.0)) {
    throw ConfigError("parameter radius must lie in (0, 1)");
  }
  if (threads < 1 || threads > 256) throw ConfigError("thread count must lie in [1, 256]");
  if (!(bisection_tolerance > 0.0 && bisection_tolerance < 1e-2)) throw ConfigError("bisection tolerance out of range");
  if (!(gamma_safety > 0.0 && gamma_safety < 1.0)) throw ConfigError("gamma safety factor must lie in (0, 1)");
  if (!(epsilon > 0.0 && epsilon < 0.1)) throw ConfigError("epsilon must lie in (0, 0.1)");
  auto check_grid = [](const Grid& g) {
    if (g.size() != 4) throw ConfigError("grids need 4 entries");
    for (std::size_t n : g)
      if (n < 1 || n > 64) throw ConfigError("grid entries must lie in [1, 64]");
  };
  if (!grid.empty()) check_grid(grid);
  for (const auto& [link, g] : link_grids) {
    if (link >= 15) throw ConfigError("grid override for a nonexistent link");
    check_grid(g);
  }
  if (toy_k < 1 || toy_s < 1 || toy_k > 20 || toy_s > 20) throw ConfigError("toy chain lengths must lie in [1, 20]");
  toy.validate();
}

ProofOptions ProofConfig::proof_options() const {
  ProofOptions o;
  o.param_radius = param_radius;
  o.grid = grid;
  o.link_grids = link_grids;
  o.correspondences = correspondences;
  o.threads = threads;
  o.disk.epsilon = epsilon;
  o.disk.bisection_tolerance = bisection_tolerance;
  o.disk.gamma_safety = gamma_safety;
  return o;
}

void apply_grid_spec(ProofConfig& cfg, const std::string& spec) {
  auto parse_list = [&](const std::string& text) {
    Grid g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(item, &used);
      } catch (const std::exception&) {
        throw ConfigError("bad grid spec '" + spec + "'");
      }
      if (used != item.size()) throw ConfigError("bad grid spec '" + spec + "'");
      g.push_back(v);
    }
    if (g.size() == 1) g.assign(4, g.front());
    if (g.size() != 4) throw ConfigError("grid spec needs 1 or 4 entries: '" + spec + "'");
    return g;
  };
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    cfg.grid = parse_list(spec);
  } else {
    std::size_t link = 0;
    try {
      link = std::stoul(spec.substr(0, colon));
    } catch (const std::exception&) {
      throw ConfigError("bad grid spec '" + spec + "'");
    }
    cfg.link_grids[link] = parse_list(spec.substr(colon + 1));
  }
}

ProofConfig proof_config_from_json(const json& j) {
  try {
    ProofConfig c;
    c.proof = get_or<std::string>(j, "proof", c.proof);
    if (j.contains("param_radius") && !j.at("param_radius").is_null()) c.param_radius = j.at("param_radius").get<double>();
    if (j.contains("grid")) c.grid = grid_from_json(j.at("grid"));
    if (j.contains("link_grids")) {
      for (const auto& [k, v] : j.at("link_grids").items()) c.link_grids[std::stoul(k)] = grid_from_json(v);
    }
    if (j.contains("correspondences")) {
      for (const auto& [k, v] : j.at("correspondences").items()) c.correspondences[std::stoul(k)] = correspondence_from_json(v);
    }
    c.threads = get_or(j, "threads", c.threads);
    c.report_path = get_or<std::string>(j, "report", c.report_path);
    c.bisection_tolerance = get_or(j, "bisection_tolerance", c.bisection_tolerance);
    c.gamma_safety = get_or(j, "gamma_safety", c.gamma_safety);
    c.epsilon = get_or(j, "epsilon", c.epsilon);
    if (j.contains("henon")) c.henon = henon_data_from_json(j.at("henon"));
    if (j.contains("toy")) {
      const auto& t = j.at("toy");
      c.toy.lambda = get_or(t, "lambda", c.toy.lambda);
      c.toy.mu = get_or(t, "mu", c.toy.mu);
      c.toy.delta = get_or(t, "delta", c.toy.delta);
      c.toy.epsilon = get_or(t, "epsilon", c.toy.epsilon);
      c.toy_k = get_or(t, "k", c.toy_k);
      c.toy_s = get_or(t, "s", c.toy_s);
    }
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
}

json proof_config_to_json(const ProofConfig& c) {
  json j;
  j["proof"] = c.proof;
  j["param_radius"] = c.param_radius ? json(*c.param_radius) : json(nullptr);
  j["grid"] = c.grid;
  json lg = json::object();
  for (const auto& [k, g] : c.link_grids) lg[std::to_string(k)] = g;
  j["link_grids"] = lg;
  json corr = json::object();
  for (const auto& [k, v] : c.correspondences) {
    json list = json::array();
    for (const auto& p : v) list.push_back(json::array({p.source_axis, p.target_axis, p.sign}));
    corr[std::to_string(k)] = list;
  }
  j["correspondences"] = corr;
  j["threads"] = c.threads;
  j["report"] = c.report_path;
  j["bisection_tolerance"] = c.bisection_tolerance;
  j["gamma_safety"] = c.gamma_safety;
  j["epsilon"] = c.epsilon;
  j["henon"] = henon_data_to_json(c.henon);
  j["toy"] = json{{"lambda", c.toy.lambda}, {"mu", c.toy.mu}, {"delta", c.toy.delta},
                  {"epsilon", c.toy.epsilon}, {"k", c.toy_k},    {"s", c.toy_s}};
  return j;
}

ProofConfig load_proof_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("configuration file '" + path + "' is not valid JSON: " + e.what());
  }
  return proof_config_from_json(j);
}

}  // namespace tangency
