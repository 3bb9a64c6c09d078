// Command-line driver: `prove henon` and `check-toy`.
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "tangency/config.hpp"
#include "tangency/report.hpp"

namespace {

constexpr int kVerified = 0;
constexpr int kInconclusive = 1;
constexpr int kBadConfig = 2;

void print_henon_summary(const tangency::TangencyCertificate& cert) {
  std::cout << "covering relations: ";
  std::size_t ok = 0;
  for (const auto& c : cert.chain.certificates) ok += c.passed ? 1 : 0;
  std::cout << ok << "/" << cert.chain.certificates.size() << " certified\n";
  std::size_t cones = 0;
  for (const auto& c : cert.cones.certificates) cones += c.passed ? 1 : 0;
  std::cout << "cone conditions:    " << cones << "/" << cert.cones.certificates.size() << " certified\n";
  for (const auto* d : {&cert.unstable_disk, &cert.stable_disk}) {
    const auto& k = d->constants;
    std::cout << to_string(d->side) << " disk (" << d->set << "): A >= " << k.A.lower << ", M <= " << k.M
              << ", L <= " << k.L << ", gamma = " << k.gamma.gamma << ", delta in " << k.delta
              << ", delta |p| in " << d->final_value << (d->passed ? "  ok" : "  FAILED") << "\n";
  }
  std::cout << "seed: |H^-1(z1) - z0| <= " << cert.seed.backward_distance
            << ", |H^14(z1) - z0| <= " << cert.seed.forward_distance << "\n";
  for (const auto& f : cert.failures) std::cout << "failure: " << f << "\n";
  std::cout << (cert.passed ? "VERIFIED: " : "INCONCLUSIVE: ") << cert.summary << "\n";
}

void print_toy_summary(const tangency::ToyReport& r) {
  std::cout << "toy chain:           " << (r.chain.passed ? "certified" : "FAILED") << " ("
            << r.chain.certificates.size() << " links)\n";
  std::cout << "linear-link cones:   " << (r.linear_cones.passed ? "certified" : "FAILED") << "\n";
  std::cout << "switch cone (x = 0): " << (r.switch_cone_at_center.positive_definite ? "certified" : "FAILED")
            << ", blocks " << (r.switch_block_1.positive_definite ? "ok" : "FAILED") << "/"
            << (r.switch_block_2.positive_definite ? "ok" : "FAILED") << "\n";
  std::cout << "switch cone radius:  " << r.switch_cone_radius << "\n";
  std::cout << "determinant identity: " << (r.determinant_samples - r.determinant_failures) << "/"
            << r.determinant_samples << " samples\n";
  std::cout << (r.passed ? "VERIFIED" : "INCONCLUSIVE") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computer-assisted verification of a generically unfolding homoclinic tangency"};
  app.require_subcommand(1);

  std::string config_path;
  std::string report_path;
  double param_radius = 0.0;
  std::vector<std::string> grids;
  std::size_t threads = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON configuration file");
    cmd->add_option("--report", report_path, "write the JSON report to this path");
    cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
  };

  auto* prove = app.add_subcommand("prove", "run a proof");
  std::string target;
  prove->add_option("target", target, "proof to run")->required()->check(CLI::IsMember({"henon"}));
  prove->add_option("--param-radius", param_radius, "half-width of the parameter interval");
  prove->add_option("--grid", grids, "subdivision grid: n, n0,n1,n2,n3 or link:n0,n1,n2,n3")->take_all();
  add_common(prove);

  auto* toy = app.add_subcommand("check-toy", "verify the analytic toy model");
  add_common(toy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadConfig;
  }

  tangency::ProofConfig cfg;
  try {
    if (!config_path.empty()) cfg = tangency::load_proof_config(config_path);
    if (!report_path.empty()) cfg.report_path = report_path;
    if (threads > 0) cfg.threads = threads;
    if (prove->parsed()) {
      cfg.proof = "henon";
      if (prove->count("--param-radius") > 0) cfg.param_radius = param_radius;
      for (const auto& g : grids) tangency::apply_grid_spec(cfg, g);
    } else {
      cfg.proof = "toy";
    }
    cfg.validate();
  } catch (const tangency::Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kBadConfig;
  }

  try {
    nlohmann::json report;
    bool verified = false;
    if (cfg.proof == "henon") {
      const auto cert = tangency::run_proof(cfg.henon, cfg.proof_options());
      print_henon_summary(cert);
      report = tangency::henon_report(cfg, cert);
      verified = cert.passed;
    } else {
      const auto r = tangency::check_toy(cfg.toy, cfg.toy_k, cfg.toy_s, 1000, cfg.threads);
      print_toy_summary(r);
      report = tangency::toy_report(cfg, r);
      verified = r.passed;
    }
    if (!cfg.report_path.empty()) tangency::write_report(report, cfg.report_path);
    return verified ? kVerified : kInconclusive;
  } catch (const tangency::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const tangency::Error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
}
