#ifndef TANGENCY_MANIFOLD_HPP
#define TANGENCY_MANIFOLD_HPP

#include <memory>
#include <string>

#include "tangency/cones.hpp"
#include "tangency/covering.hpp"
#include "tangency/hset.hpp"
#include "tangency/vector_map.hpp"

namespace tangency {

// Bracket [lower, upper] of the largest alpha for which V - alpha I is
// certified positive definite; `lower` is certified, `upper` fails or is an
// upper bound of the smallest eigenvalue.
struct EigenBracket {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};

// Rigorous lower bound of the smallest eigenvalue over all symmetric point
// matrices in V, by bisection on alpha with rump_positive_definite(V - alpha I).
// Throws DomainError when V itself is not certified positive definite.
EigenBracket compute_A(const IntervalMatrix& v, double tolerance = 1e-12);

// Derivatives of the parameterized map over N x C in local coordinates of N:
// dz is the n x n block with respect to the chart variables, dlambda the
// column with respect to the (raw) parameter.
struct LocalJet {
  IntervalMatrix dz;
  IntervalVector dlambda;
};

// Local derivative blocks of an (n+1)-dimensional map whose last coordinate
// is the parameter, over the set N (n-dimensional) and parameter interval c.
LocalJet local_parameter_derivative(const HSet& n, const VectorMap& full_map, const Interval& c);

// Upper bound of sum_i |a_i| |row_i(dz)| |dlambda_i| over the enclosure.
double compute_M(const LocalJet& jet, const QuadraticForm& q);
// Upper bound of |beta| max |dlambda restricted to the stable block|^2.
double compute_L(const LocalJet& jet, const QuadraticForm& q);

struct GammaChoice {
  double gamma = 0.0;
  // Lower bound of A - 2 M gamma - L gamma^2.
  double slack = 0.0;
  int shrinks = 0;
};

// Near-optimal gamma with A - 2 M gamma - L gamma^2 > 0 certified. When
// M = L = 0 any gamma works and `unbounded_gamma` is returned. Throws
// DomainError when A <= 0 or no candidate verifies.
GammaChoice choose_gamma(double a, double m, double l, double safety = 0.99, double unbounded_gamma = 1e3);

enum class DiskSide { stable, unstable };
std::string to_string(DiskSide side);

struct DiskConstants {
  double epsilon = 0.0;
  EigenBracket A;
  double M = 0.0;
  double L = 0.0;
  GammaChoice gamma;
  // Enclosure of gamma^2 / |alpha|.
  Interval delta;
};

struct DiskCertificate {
  DiskSide side = DiskSide::stable;
  std::string set;
  Interval parameter;
  CoveringCertificate self_covering;
  ConeCertificate cone;
  DiskConstants constants;
  double parameter_coefficient = 0.0;
  // Enclosure of delta |p_param|; the final check needs it above 1.
  Interval final_value;
  bool final_check = false;
  bool passed = false;
  std::string failure;
};

struct DiskOptions {
  double epsilon = 1e-6;
  double bisection_tolerance = 1e-12;
  double gamma_safety = 0.99;
  Grid grid;  // defaults to 1 along every axis
};

// Verifies that the (un)stable manifold of the fixed point over the parameter
// interval c is a disk in c x N compatible with the cones of q_tilde, and
// that the resulting width bound beats the parameter coefficient of the
// full form. `full_map` acts on (chart variables, parameter); for the
// unstable side pass the inverse map. q_tilde must be positive exactly on the
// unstable axes of n.
DiskCertificate verify_disk(DiskSide side, const HSet& n, const QuadraticForm& q_tilde, double parameter_coefficient,
                            std::shared_ptr<const VectorMap> full_map, const Interval& c,
                            const DiskOptions& options = {});

}  // namespace tangency

#endif  // TANGENCY_MANIFOLD_HPP
