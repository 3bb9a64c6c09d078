#ifndef TANGENCY_HENON_HPP
#define TANGENCY_HENON_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tangency/cones.hpp"
#include "tangency/covering.hpp"
#include "tangency/hset.hpp"
#include "tangency/manifold.hpp"
#include "tangency/projective.hpp"

namespace tangency {

// scale * prod(base^power). Bases are "lambda", "mu" or decimal literals.
struct Term {
  double scale = 1.0;
  std::vector<std::pair<std::string, int>> powers;

  [[nodiscard]] double evaluate(double lambda, double mu) const;
};

struct HenonSetSpec {
  // Local diameters along u, s, t in units of HenonProofData::diameter_unit.
  std::array<Term, 3> diameters;
  // Parameter diameter in units of the parameter radius.
  Term parameter_diameter;
  // Form coefficients along u, s, t, a.
  std::array<Term, 4> form;
  std::vector<std::size_t> unstable_axes;
};

struct HenonProofData {
  std::string a0 = "1.3145271093265";
  std::string b0 = "-0.3";
  double param_radius = 1e-5;
  std::string lambda = "3.858169402";
  std::string mu = "0.07775708341";
  // z1 = z0 + seed_u u0 + seed_s s0.
  std::string seed_u = "0.0001993152279412426";
  std::string seed_s = "2.50404e-11";
  double diameter_unit = 1e-5;
  // Expected bounds on |H^-1(z1) - z0| and |H^14(z1) - z0|.
  double seed_backward_bound = 5.2e-5;
  double seed_forward_bound = 1.2e-5;
  // Widest tolerated orbit enclosure component when building centers.
  double orbit_width_limit = 1e-8;
  std::vector<HenonSetSpec> sets;

  // The built-in data set (a0 = 1.3145271093265, b = -0.3).
  static HenonProofData defaults();
};

// H(x, y) = (a - x^2 + b y, x) with its inverse (y, (x - a + y^2) / b).
PlanarMapFamily henon_family(const Interval& b);

struct HenonChain {
  Interval a0;
  Interval b;
  IntervalVector z0;  // fixed point
  IntervalVector u0;  // unstable eigenvector
  IntervalVector s0;  // stable eigenvector
  IntervalVector z1;  // homoclinic seed
  // orbit[0] encloses c1; orbit[i] encloses PH(c_i) for i = 1..13.
  std::vector<IntervalVector> orbit;
  std::vector<HSet> sets;
  std::vector<QuadraticForm> forms;
  // Three-dimensional restrictions at both ends with their forms.
  HSet stable_end;
  QuadraticForm stable_form;
  double stable_parameter_coefficient = 0.0;
  Interval stable_parameters;
  HSet unstable_end;
  QuadraticForm unstable_form;
  double unstable_parameter_coefficient = 0.0;
  Interval unstable_parameters;
};

// Fixed point x0 = y0 = (b - sqrt((b - 1)^2 + 4a) - 1) / 2.
IntervalVector henon_fixed_point(const Interval& a, const Interval& b);

// Builds centers, frames, diameters and forms of the sixteen sets. Throws
// DomainError when an orbit enclosure grows beyond the width limit.
HenonChain build_chain(const HenonProofData& data, double param_radius);

struct SeedQuality {
  IntervalVector backward;  // H^-1(z1) - z0
  IntervalVector forward;   // H^14(z1) - z0
  double backward_distance = 0.0;  // upper bounds of the Euclidean norms
  double forward_distance = 0.0;
  bool passed = false;
};

SeedQuality seed_quality(const HenonChain& chain, const HenonProofData& data);

struct ProofOptions {
  std::optional<double> param_radius;
  Grid grid;  // applies to every link unless overridden
  std::map<std::size_t, Grid> link_grids;
  std::map<std::size_t, AxisCorrespondence> correspondences;
  std::size_t threads = 1;
  DiskOptions disk;
};

struct TangencyCertificate {
  Interval parameter_interval;
  double param_radius = 0.0;
  std::string a0;
  std::string b0;
  ChainResult chain;
  ConeChainResult cones;
  DiskCertificate stable_disk;
  DiskCertificate unstable_disk;
  SeedQuality seed;
  bool passed = false;
  std::vector<std::string> failures;
  std::map<std::string, double> timings_ms;
  std::string summary;
  std::string conclusion;
};

TangencyCertificate run_proof(const HenonProofData& data, const ProofOptions& options);

}  // namespace tangency

#endif  // TANGENCY_HENON_HPP
