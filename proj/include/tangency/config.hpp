#ifndef TANGENCY_CONFIG_HPP
#define TANGENCY_CONFIG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tangency/henon.hpp"
#include "tangency/toy_model.hpp"

namespace tangency {

// Built-in Henon data set as a JSON document (see docs/report_format.md).
std::string_view default_henon_config();

HenonProofData henon_data_from_json(const nlohmann::json& j);
nlohmann::json henon_data_to_json(const HenonProofData& d);

struct ProofConfig {
  std::string proof = "henon";  // "henon" or "toy"
  std::optional<double> param_radius;
  Grid grid;
  std::map<std::size_t, Grid> link_grids;
  std::map<std::size_t, AxisCorrespondence> correspondences;
  std::size_t threads = 1;
  std::string report_path;
  double bisection_tolerance = 1e-12;
  double gamma_safety = 0.99;
  double epsilon = 1e-6;
  HenonProofData henon = HenonProofData::defaults();
  ToyModelParams toy;
  std::size_t toy_k = 3;
  std::size_t toy_s = 3;

  // Throws ConfigError on out-of-range values.
  void validate() const;
  [[nodiscard]] ProofOptions proof_options() const;
};

// Grid spec: "n" (n pieces along every axis), "n0,n1,n2,n3", or
// "link:n0,n1,n2,n3" for a single link. Applies the spec to cfg.
void apply_grid_spec(ProofConfig& cfg, const std::string& spec);

// Reads a configuration file. Keys that are absent keep their defaults; a
// "henon" object replaces the built-in data set entirely.
ProofConfig load_proof_config(const std::string& path);
ProofConfig proof_config_from_json(const nlohmann::json& j);
nlohmann::json proof_config_to_json(const ProofConfig& cfg);

}  // namespace tangency

#endif  // TANGENCY_CONFIG_HPP
