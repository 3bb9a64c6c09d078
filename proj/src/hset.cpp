#include "tangency/hset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tangency {

QuadraticForm::QuadraticForm(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c) || c == 0.0) throw ConfigError("quadratic form coefficients must be finite and nonzero");
  }
}

Interval QuadraticForm::value(const IntervalVector& z) const {
  if (z.size() != coeffs_.size()) throw ShapeError("quadratic form and vector dimensions differ");
  Interval s(0.0);
  for (std::size_t i = 0; i < z.size(); ++i) s += Interval(coeffs_[i]) * sqr(z[i]);
  return s;
}

IntervalMatrix QuadraticForm::matrix() const {
  IntervalMatrix m(coeffs_.size(), coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) m(i, i) = Interval(coeffs_[i]);
  return m;
}

double QuadraticForm::alpha_norm() const {
  double best = 0.0;
  for (double c : coeffs_)
    if (c > 0.0) best = std::max(best, c);
  return best;
}

double QuadraticForm::beta_norm() const {
  double best = 0.0;
  for (double c : coeffs_)
    if (c < 0.0) best = std::max(best, -c);
  return best;
}

std::vector<std::size_t> QuadraticForm::positive_axes() const {
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] > 0.0) axes.push_back(i);
  return axes;
}

std::vector<std::size_t> QuadraticForm::negative_axes() const {
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] < 0.0) axes.push_back(i);
  return axes;
}

QuadraticForm QuadraticForm::restricted(const std::vector<std::size_t>& axes) const {
  std::vector<double> c;
  c.reserve(axes.size());
  for (std::size_t a : axes) {
    if (a >= coeffs_.size()) throw ShapeError("quadratic form axis out of range");
    c.push_back(coeffs_[a]);
  }
  return QuadraticForm(std::move(c));
}

QuadraticForm QuadraticForm::negated() const {
  std::vector<double> c = coeffs_;
  for (double& x : c) x = -x;
  return QuadraticForm(std::move(c));
}

Interval local_q_value(const QuadraticForm& q, const IntervalVector& z) { return q.value(z); }

std::vector<Interval> split_unit(std::size_t count) {
  if (count == 0) throw ShapeError("subdivision count must be positive");
  std::vector<Interval> out;
  out.reserve(count);
  // Neighbouring pieces share the same rounded breakpoint, so the union is
  // exactly [-1, 1].
  double prev = -1.0;
  for (std::size_t k = 1; k <= count; ++k) {
    const double next = (k == count) ? 1.0 : -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(count);
    out.emplace_back(prev, next);
    prev = next;
  }
  return out;
}

HSet::HSet(std::string name, Vector center, Matrix coord_matrix, Vector diameters,
           std::vector<std::size_t> unstable_axes)
    : name_(std::move(name)),
      center_(std::move(center)),
      coord_(std::move(coord_matrix)),
      diameters_(std::move(diameters)),
      unstable_(std::move(unstable_axes)) {
  const std::size_t n = center_.size();
  if (n == 0) throw ShapeError("h-set must have positive dimension");
  if (coord_.rows() != n || coord_.cols() != n || diameters_.size() != n) {
    throw ShapeError("h-set '" + name_ + "': inconsistent dimensions");
  }
  for (double d : diameters_) {
    if (!(d > 0.0) || !std::isfinite(d)) throw ConfigError("h-set '" + name_ + "': diameters must be positive");
  }
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += coord_(i, j) * coord_(i, j);
    if (std::fabs(std::sqrt(s) - 1.0) > 1e-9) {
      throw ConfigError("h-set '" + name_ + "': coordinate matrix columns must be normalized");
    }
  }
  std::sort(unstable_.begin(), unstable_.end());
  if (std::adjacent_find(unstable_.begin(), unstable_.end()) != unstable_.end()) {
    throw ConfigError("h-set '" + name_ + "': repeated unstable axis");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(unstable_.begin(), unstable_.end(), i)) stable_.push_back(i);
  }
  if (!unstable_.empty() && unstable_.back() >= n) throw ConfigError("h-set '" + name_ + "': unstable axis out of range");
  inv_coord_ = inverse_enclosure(coord_);
}

bool HSet::is_unstable(std::size_t axis) const {
  return std::binary_search(unstable_.begin(), unstable_.end(), axis);
}

IntervalVector HSet::to_local(const IntervalVector& p) const {
  if (p.size() != dimension()) throw ShapeError("point dimension differs from h-set dimension");
  return mat_vec(inv_coord_, p - to_interval(center_));
}

IntervalVector HSet::to_normalized(const IntervalVector& p) const {
  IntervalVector z = to_local(p);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = z[i] / Interval(diameters_[i]);
  return z;
}

IntervalVector HSet::from_local(const IntervalVector& z) const {
  if (z.size() != dimension()) throw ShapeError("local vector dimension differs from h-set dimension");
  return to_interval(center_) + mat_vec(to_interval(coord_), z);
}

IntervalVector HSet::from_normalized(const IntervalVector& z) const {
  if (z.size() != dimension()) throw ShapeError("local vector dimension differs from h-set dimension");
  IntervalVector local(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) local[i] = Interval(diameters_[i]) * z[i];
  return from_local(local);
}

IntervalVector HSet::hull() const {
  IntervalVector unit(dimension());
  for (auto& x : unit) x = Interval(-1.0, 1.0);
  return from_normalized(unit);
}

bool HSet::certainly_contains(const IntervalVector& p) const {
  const IntervalVector z = to_normalized(p);
  return std::all_of(z.begin(), z.end(), [](const Interval& x) { return x.subset_of(Interval(-1.0, 1.0)); });
}

namespace {

// Cartesian product of per-axis piece lists.
std::vector<IntervalVector> product(const std::vector<std::vector<Interval>>& axes) {
  std::vector<IntervalVector> out{IntervalVector(std::vector<Interval>{})};
  for (const auto& choices : axes) {
    std::vector<IntervalVector> next;
    next.reserve(out.size() * choices.size());
    for (const auto& prefix : out) {
      for (const auto& c : choices) {
        std::vector<Interval> v(prefix.begin(), prefix.end());
        v.push_back(c);
        next.emplace_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

void require_grid(const Grid& grid, std::size_t n) {
  if (grid.size() != n) throw ShapeError("grid must give one subdivision count per axis");
  for (std::size_t g : grid)
    if (g == 0) throw ShapeError("subdivision count must be positive");
}

}  // namespace

std::vector<IntervalVector> HSet::walls(std::size_t axis, int side, const Grid& grid) const {
  require_grid(grid, dimension());
  if (!is_unstable(axis)) throw ShapeError("walls are defined for unstable axes only");
  if (side != 1 && side != -1) throw ShapeError("wall side must be +1 or -1");
  std::vector<std::vector<Interval>> axes;
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (j == axis) {
      axes.push_back({Interval(static_cast<double>(side))});
    } else {
      axes.push_back(split_unit(grid[j]));
    }
  }
  return product(axes);
}

std::vector<IntervalVector> HSet::pieces(const Grid& grid) const {
  require_grid(grid, dimension());
  std::vector<std::vector<Interval>> axes;
  for (std::size_t j = 0; j < dimension(); ++j) axes.push_back(split_unit(grid[j]));
  return product(axes);
}

HSet HSet::restricted(const std::vector<std::size_t>& axes, std::string name) const {
  const std::size_t m = axes.size();
  Vector c(m);
  Matrix mat(m, m);
  Vector d(m);
  std::vector<std::size_t> unstable;
  for (std::size_t i = 0; i < m; ++i) {
    if (axes[i] >= dimension()) throw ShapeError("restricted axis out of range");
    c[i] = center_[axes[i]];
    d[i] = diameters_[axes[i]];
    for (std::size_t j = 0; j < m; ++j) mat(i, j) = coord_(axes[i], axes[j]);
    if (is_unstable(axes[i])) unstable.push_back(i);
  }
  return HSet(std::move(name), std::move(c), std::move(mat), std::move(d), std::move(unstable));
}

void HSet::require_compatible(const QuadraticForm& q) const {
  if (q.size() != dimension()) throw ConfigError("form dimension differs from h-set '" + name_ + "'");
  for (std::size_t i = 0; i < dimension(); ++i) {
    const bool ok = is_unstable(i) ? q[i] > 0.0 : q[i] < 0.0;
    if (!ok) {
      std::ostringstream msg;
      msg << "form on h-set '" << name_ << "' has the wrong sign on axis " << i;
      throw ConfigError(msg.str());
    }
  }
}

}  // namespace tangency
