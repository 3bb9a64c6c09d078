#include "tangency/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace tangency {

using nlohmann::json;

std::string exact_decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_exact_decimal(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ConfigError("not a decimal number: '" + s + "'");
  return v;
}

json to_json(const Interval& x) { return json::array({exact_decimal(x.lo()), exact_decimal(x.hi())}); }

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("interval must be a [lo, hi] pair");
  return Interval(parse_exact_decimal(j[0]), parse_exact_decimal(j[1]));
}

json to_json(const IntervalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntervalMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

namespace {

json exact_list(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(exact_decimal(x));
  return a;
}

}  // namespace

json to_json(const HSet& n) {
  json cols = json::array();
  for (std::size_t j = 0; j < n.dimension(); ++j) cols.push_back(exact_list(n.coord_matrix().column(j).values()));
  return json{{"name", n.name()},
              {"center", exact_list(n.center().values())},
              {"matrix_columns", cols},
              {"diameters", exact_list(n.diameters().values())},
              {"unstable_axes", n.unstable_axes()}};
}

json to_json(const QuadraticForm& q) { return json{{"coeffs", exact_list(q.coeffs())}}; }

json to_json(const CoveringCertificate& c) {
  json corr = json::array();
  for (const auto& p : c.correspondence) {
    corr.push_back(json{{"source_axis", p.source_axis}, {"target_axis", p.target_axis}, {"sign", p.sign}});
  }
  json walls = json::array();
  for (const auto& w : c.walls) {
    walls.push_back(json{{"source_axis", w.source_axis},
                         {"side", w.side},
                         {"target_axis", w.target_axis},
                         {"image", to_json(w.image)},
                         {"margin", exact_decimal(w.margin)}});
  }
  json entry = json::array();
  for (const auto& e : c.entry) {
    entry.push_back(json{{"target_axis", e.target_axis}, {"image", to_json(e.image)}, {"margin", exact_decimal(e.margin)}});
  }
  return json{{"source", c.source}, {"target", c.target}, {"map", c.map},     {"passed", c.passed},
              {"grid", c.grid},     {"correspondence", corr}, {"walls", walls}, {"entry", entry},
              {"failure", c.failure}};
}

json to_json(const DefinitenessResult& d) {
  json vertices = json::array();
  for (const auto& v : d.vertices) {
    json pivots = json::array();
    for (const auto& p : v.cholesky.pivots) pivots.push_back(to_json(p));
    vertices.push_back(json{{"signs", v.signs},
                            {"positive_definite", v.cholesky.success},
                            {"min_pivot", exact_decimal(v.cholesky.min_pivot)},
                            {"pivots", pivots}});
  }
  return json{{"positive_definite", d.positive_definite}, {"margin", exact_decimal(d.margin)}, {"vertices", vertices}};
}

json to_json(const ConeCertificate& c) {
  return json{{"source", c.source},
              {"target", c.target},
              {"passed", c.passed},
              {"matrix", to_json(c.matrix)},
              {"definiteness", to_json(c.definiteness)},
              {"failure", c.failure}};
}

json to_json(const DiskCertificate& d) {
  const auto& k = d.constants;
  return json{{"side", to_string(d.side)},
              {"set", d.set},
              {"parameter", to_json(d.parameter)},
              {"self_covering", to_json(d.self_covering)},
              {"cone", to_json(d.cone)},
              {"constants",
               json{{"epsilon", exact_decimal(k.epsilon)},
                    {"A", exact_decimal(k.A.lower)},
                    {"A_bracket_upper", exact_decimal(k.A.upper)},
                    {"M", exact_decimal(k.M)},
                    {"L", exact_decimal(k.L)},
                    {"gamma", exact_decimal(k.gamma.gamma)},
                    {"gamma_slack", exact_decimal(k.gamma.slack)},
                    {"delta", to_json(k.delta)}}},
              {"parameter_coefficient", exact_decimal(d.parameter_coefficient)},
              {"final_value", to_json(d.final_value)},
              {"final_check", d.final_check},
              {"passed", d.passed},
              {"failure", d.failure}};
}

json to_json(const SeedQuality& s) {
  return json{{"backward", to_json(s.backward)},
              {"forward", to_json(s.forward)},
              {"backward_distance", exact_decimal(s.backward_distance)},
              {"forward_distance", exact_decimal(s.forward_distance)},
              {"passed", s.passed}};
}

json to_json(const TangencyCertificate& t) {
  json covering = json::array();
  for (const auto& c : t.chain.certificates) covering.push_back(to_json(c));
  json cones = json::array();
  for (const auto& c : t.cones.certificates) cones.push_back(to_json(c));
  json timings = json::object();
  for (const auto& [k, v] : t.timings_ms) timings[k] = v;
  return json{{"parameter_interval", to_json(t.parameter_interval)},
              {"param_radius", exact_decimal(t.param_radius)},
              {"a0", t.a0},
              {"b0", t.b0},
              {"covering", covering},
              {"cones", cones},
              {"unstable_disk", to_json(t.unstable_disk)},
              {"stable_disk", to_json(t.stable_disk)},
              {"seed_quality", to_json(t.seed)},
              {"passed", t.passed},
              {"failures", t.failures},
              {"timings_ms", timings},
              {"conclusion", t.conclusion},
              {"summary", t.summary}};
}

json to_json(const ToyReport& r) {
  json covering = json::array();
  for (const auto& c : r.chain.certificates) covering.push_back(to_json(c));
  json cones = json::array();
  for (const auto& c : r.linear_cones.certificates) cones.push_back(to_json(c));
  return json{{"covering", covering},
              {"chain_passed", r.chain.passed},
              {"linear_cones", cones},
              {"cones_passed", r.linear_cones.passed},
              {"switch_cone_at_center", to_json(r.switch_cone_at_center)},
              {"switch_block_1", to_json(r.switch_block_1)},
              {"switch_block_2", to_json(r.switch_block_2)},
              {"switch_cone_radius", exact_decimal(r.switch_cone_radius)},
              {"determinant_samples", r.determinant_samples},
              {"determinant_failures", r.determinant_failures},
              {"passed", r.passed},
              {"notes", r.notes}};
}

json henon_report(const ProofConfig& cfg, const TangencyCertificate& cert) {
  return json{{"format", "tangency-report/1"},
              {"config", proof_config_to_json(cfg)},
              {"certificate", to_json(cert)},
              {"verdict", cert.passed ? "VERIFIED" : "INCONCLUSIVE"},
              {"summary", cert.summary}};
}

json toy_report(const ProofConfig& cfg, const ToyReport& r) {
  return json{{"format", "tangency-report/1"},
              {"config", proof_config_to_json(cfg)},
              {"toy", to_json(r)},
              {"verdict", r.passed ? "VERIFIED" : "INCONCLUSIVE"}};
}

void write_report(const json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write report to '" + path + "'");
  out << report.dump(2) << '\n';
  if (!out) throw ConfigError("failed writing report to '" + path + "'");
}

}  // namespace tangency
