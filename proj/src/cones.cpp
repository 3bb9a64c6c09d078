#include "tangency/cones.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tangency/parallel.hpp"

namespace tangency {

CholeskyResult interval_cholesky(const IntervalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ShapeError("Cholesky needs a square matrix");
  CholeskyResult r;
  r.min_pivot = std::numeric_limits<double>::infinity();
  IntervalMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Interval d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= sqr(l(j, k));
    r.pivots.push_back(d);
    r.min_pivot = std::min(r.min_pivot, d.lo());
    if (!(d.lo() > 0.0)) {
      r.success = false;
      return r;
    }
    l(j, j) = sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Interval s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  r.success = true;
  return r;
}

DefinitenessResult rump_positive_definite(const IntervalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n || n == 0) throw ShapeError("definiteness check needs a nonempty square matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(a(i, j) == a(j, i))) throw ShapeError("definiteness check needs a symmetric interval matrix");
    }
  }
  DefinitenessResult res;
  res.center = mid(a);
  res.radius = rad(a);
  res.positive_definite = true;
  res.margin = std::numeric_limits<double>::infinity();
  const std::size_t count = std::size_t{1} << (n - 1);
  for (std::size_t mask = 0; mask < count; ++mask) {
    VertexCheck v;
    v.signs.assign(n, 1);
    for (std::size_t i = 1; i < n; ++i) v.signs[i] = ((mask >> (i - 1)) & 1U) != 0U ? -1 : 1;
    IntervalMatrix az(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        az(i, j) = Interval(res.center(i, j)) - Interval(v.signs[i] * v.signs[j]) * Interval(res.radius(i, j));
      }
    }
    v.cholesky = interval_cholesky(az);
    res.margin = std::min(res.margin, v.cholesky.min_pivot);
    if (!v.cholesky.success) res.positive_definite = false;
    res.vertices.push_back(std::move(v));
  }
  return res;
}

IntervalMatrix local_derivative(const HSet& src, const HSet& tgt, const VectorMap& map) {
  if (src.dimension() != tgt.dimension() || map.dimension() != src.dimension()) {
    throw ShapeError("cone: source, target and map dimensions differ");
  }
  return mat_mul(tgt.inv_coord(), mat_mul(map.jacobian(src.hull()), to_interval(src.coord_matrix())));
}

IntervalMatrix cone_matrix(const HSet& src, const QuadraticForm& qn, const HSet& tgt, const QuadraticForm& qm,
                           const VectorMap& map) {
  if (qn.size() != src.dimension() || qm.size() != tgt.dimension()) throw ShapeError("cone: form dimension mismatch");
  const IntervalMatrix d = local_derivative(src, tgt, map);
  const IntervalMatrix v = mat_mul(transpose(d), mat_mul(qm.matrix(), d)) - qn.matrix();
  const std::size_t n = v.rows();
  IntervalMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s(i, j) = (v(i, j) + v(j, i)) * Interval(0.5);
  }
  return s;
}

ConeCertificate check_cone(const HSet& src, const QuadraticForm& qn, const HSet& tgt, const QuadraticForm& qm,
                           const VectorMap& map) {
  ConeCertificate c;
  c.source = src.name();
  c.target = tgt.name();
  try {
    c.matrix = cone_matrix(src, qn, tgt, qm, map);
    c.definiteness = rump_positive_definite(c.matrix);
    c.passed = c.definiteness.positive_definite;
    if (!c.passed) {
      std::ostringstream msg;
      msg << "cone matrix not certified positive definite (smallest pivot bound " << c.definiteness.margin << ")";
      c.failure = msg.str();
    }
  } catch (const Error& err) {
    c.passed = false;
    c.failure = std::string("evaluation error: ") + err.what();
  }
  return c;
}

ConeChainResult check_cone_chain(const std::vector<ConeLink>& links, std::size_t threads) {
  for (const auto& l : links) {
    if (!l.source || !l.target || !l.source_form || !l.target_form || !l.map) {
      throw ConfigError("cone link is incomplete");
    }
  }
  ConeChainResult r;
  r.certificates.resize(links.size());
  parallel_for(links.size(), threads, [&](std::size_t i) {
    const auto& l = links[i];
    r.certificates[i] = check_cone(*l.source, *l.source_form, *l.target, *l.target_form, *l.map);
  });
  r.passed = std::all_of(r.certificates.begin(), r.certificates.end(), [](const auto& c) { return c.passed; });
  return r;
}

}  // namespace tangency
