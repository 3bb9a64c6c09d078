#include "tangency/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tangency/projective.hpp"

namespace tangency {

namespace {

bool certified_above(const IntervalMatrix& v, double alpha) {
  IntervalMatrix s = v;
  for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) = s(i, i) - Interval(alpha);
  return rump_positive_definite(s).positive_definite;
}

}  // namespace

EigenBracket compute_A(const IntervalMatrix& v, double tolerance) {
  if (v.rows() != v.cols() || v.rows() == 0) throw ShapeError("compute_A needs a nonempty square matrix");
  if (!(tolerance > 0.0)) throw ConfigError("bisection tolerance must be positive");
  EigenBracket b;
  if (!certified_above(v, 0.0)) throw DomainError("no positive A certifiable: the cone matrix is not positive definite");
  // The smallest eigenvalue never exceeds the smallest diagonal entry.
  double hi = v(0, 0).hi();
  for (std::size_t i = 1; i < v.rows(); ++i) hi = std::min(hi, v(i, i).hi());
  double lo = 0.0;
  while (hi - lo > tolerance * std::max(1.0, std::fabs(hi)) && b.iterations < 200) {
    const double m = lo + 0.5 * (hi - lo);
    if (m <= lo || m >= hi) break;
    if (certified_above(v, m)) {
      lo = m;
    } else {
      hi = m;
    }
    ++b.iterations;
  }
  b.lower = lo;
  b.upper = hi;
  return b;
}

LocalJet local_parameter_derivative(const HSet& n, const VectorMap& full_map, const Interval& c) {
  const std::size_t dim = n.dimension();
  if (full_map.dimension() != dim + 1) throw ShapeError("parameterized map must have one more coordinate than the set");
  const IntervalVector h = n.hull();
  std::vector<Interval> box(h.begin(), h.end());
  box.push_back(c);
  const IntervalMatrix j = full_map.jacobian(IntervalVector(std::move(box)));
  IntervalMatrix jz(dim, dim);
  IntervalVector jl(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) jz(r, k) = j(r, k);
    jl[r] = j(r, dim);
  }
  LocalJet out;
  out.dz = mat_mul(n.inv_coord(), mat_mul(jz, to_interval(n.coord_matrix())));
  out.dlambda = mat_vec(n.inv_coord(), jl);
  return out;
}

double compute_M(const LocalJet& jet, const QuadraticForm& q) {
  const std::size_t dim = jet.dz.rows();
  if (q.size() != dim || jet.dlambda.size() != dim) throw ShapeError("compute_M: dimension mismatch");
  Interval s(0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    s += Interval(std::fabs(q[i])) * Interval(norm_bound(jet.dz.row(i))) * Interval(jet.dlambda[i].mag());
  }
  return s.hi();
}

double compute_L(const LocalJet& jet, const QuadraticForm& q) {
  if (q.size() != jet.dlambda.size()) throw ShapeError("compute_L: dimension mismatch");
  Interval s(0.0);
  for (std::size_t i : q.negative_axes()) s += sqr(Interval(jet.dlambda[i].mag()));
  return (Interval(q.beta_norm()) * s).hi();
}

GammaChoice choose_gamma(double a, double m, double l, double safety, double unbounded_gamma) {
  if (!(a > 0.0)) throw DomainError("choose_gamma needs A > 0");
  if (m < 0.0 || l < 0.0) throw DomainError("choose_gamma needs M, L >= 0");
  if (!(safety > 0.0 && safety < 1.0)) throw ConfigError("gamma safety factor must lie in (0, 1)");
  GammaChoice g;
  if (m == 0.0 && l == 0.0) {
    g.gamma = unbounded_gamma;
    g.slack = a;
    return g;
  }
  // Positive root of A - 2 M x - L x^2, in a cancellation-free form.
  const double root = l > 0.0 ? a / (m + std::sqrt(m * m + a * l)) : a / (2.0 * m);
  double gamma = safety * root;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Interval x(gamma);
    const Interval slack = Interval(a) - Interval(2.0) * Interval(m) * x - Interval(l) * sqr(x);
    if (slack.lo() > 0.0) {
      g.gamma = gamma;
      g.slack = slack.lo();
      g.shrinks = attempt;
      return g;
    }
    gamma *= safety;
  }
  throw DomainError("no gamma with A - 2 M gamma - L gamma^2 > 0 could be certified");
}

std::string to_string(DiskSide side) { return side == DiskSide::stable ? "stable" : "unstable"; }

DiskCertificate verify_disk(DiskSide side, const HSet& n, const QuadraticForm& q_tilde, double parameter_coefficient,
                            std::shared_ptr<const VectorMap> full_map, const Interval& c, const DiskOptions& options) {
  if (!full_map) throw ConfigError("verify_disk needs a map");
  n.require_compatible(q_tilde);
  DiskCertificate cert;
  cert.side = side;
  cert.set = n.name();
  cert.parameter = c;
  cert.parameter_coefficient = parameter_coefficient;
  cert.constants.epsilon = options.epsilon;

  const auto slice = std::make_shared<FixedParameterMap>(full_map, c);
  const Grid grid = options.grid.empty() ? Grid(n.dimension(), 1) : options.grid;

  cert.self_covering = check_covering(n, n, *slice, grid);
  if (!cert.self_covering.passed) {
    cert.failure = "self-covering of " + n.name() + ": " + cert.self_covering.failure;
    return cert;
  }
  cert.cone = check_cone(n, q_tilde, n, q_tilde, *slice);
  if (!cert.cone.passed) {
    cert.failure = "cone condition on " + n.name() + ": " + cert.cone.failure;
    return cert;
  }

  try {
    const LocalJet jet = local_parameter_derivative(n, *full_map, c);
    const IntervalMatrix q = q_tilde.matrix();
    IntervalMatrix v = mat_mul(transpose(jet.dz), mat_mul(q, jet.dz)) - Interval(1.0 + options.epsilon) * q;
    const std::size_t dim = v.rows();
    IntervalMatrix vs(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) vs(i, j) = (v(i, j) + v(j, i)) * Interval(0.5);

    auto& k = cert.constants;
    k.A = compute_A(vs, options.bisection_tolerance);
    k.M = compute_M(jet, q_tilde);
    k.L = compute_L(jet, q_tilde);
    k.gamma = choose_gamma(k.A.lower, k.M, k.L, options.gamma_safety);
    k.delta = sqr(Interval(k.gamma.gamma)) / Interval(q_tilde.alpha_norm());
    cert.final_value = k.delta * Interval(std::fabs(parameter_coefficient));
    cert.final_check = cert.final_value.lo() > 1.0;
  } catch (const Error& err) {
    cert.failure = std::string("disk constants for ") + n.name() + ": " + err.what();
    return cert;
  }
  if (!cert.final_check) {
    std::ostringstream msg;
    msg << "disk width check on " << n.name() << " fails: delta |p| = " << cert.final_value << " is not above 1";
    cert.failure = msg.str();
    return cert;
  }
  cert.passed = true;
  return cert;
}

}  // namespace tangency
