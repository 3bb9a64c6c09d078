#include "tangency/jet.hpp"

#include <ostream>
#include <utility>

namespace tangency {

namespace {

void require_same_n(const Jet2& u, const Jet2& v) {
  if (u.n() != v.n()) throw ShapeError("jets over different variable counts");
}

IntervalMatrix zero_hess(std::size_t n) { return IntervalMatrix(n, n); }

}  // namespace

Jet2::Jet2(const Interval& value, std::size_t n) : value_(value), grad_(n), hess_(zero_hess(n)) {}

Jet2 Jet2::variable(std::size_t index, const Interval& value, std::size_t n) {
  if (index >= n) throw ShapeError("jet variable index out of range");
  Jet2 j(value, n);
  j.grad_[index] = Interval(1.0);
  return j;
}

Jet2 Jet2::first_order(const Interval& value, IntervalVector grad) {
  Jet2 j;
  j.value_ = value;
  j.grad_ = std::move(grad);
  j.has_hess_ = false;
  return j;
}

Jet2 Jet2::second_order(const Interval& value, IntervalVector grad, IntervalMatrix hess) {
  if (hess.rows() != grad.size() || hess.cols() != grad.size()) {
    throw ShapeError("Hessian shape does not match gradient");
  }
  Jet2 j;
  j.value_ = value;
  j.grad_ = std::move(grad);
  j.hess_ = std::move(hess);
  return j;
}

const IntervalMatrix& Jet2::hess() const {
  if (!has_hess_) throw ShapeError("first-order jet has no Hessian");
  return hess_;
}

const Interval& Jet2::hess(std::size_t i, std::size_t j) const { return hess()(i, j); }

Jet2 Jet2::partial(std::size_t k) const {
  if (k >= n()) throw ShapeError("partial derivative index out of range");
  return first_order(grad_[k], hess().row(k));
}

Jet2 operator+(const Jet2& u, const Jet2& v) {
  require_same_n(u, v);
  Jet2 r;
  r.value_ = u.value_ + v.value_;
  r.grad_ = u.grad_ + v.grad_;
  r.has_hess_ = u.has_hess_ && v.has_hess_;
  if (r.has_hess_) r.hess_ = u.hess_ + v.hess_;
  return r;
}

Jet2 operator-(const Jet2& u) {
  Jet2 r = u;
  r.value_ = -u.value_;
  for (auto& g : r.grad_) g = -g;
  if (r.has_hess_) r.hess_ = Interval(-1.0) * u.hess_;
  return r;
}

Jet2 operator-(const Jet2& u, const Jet2& v) {
  require_same_n(u, v);
  Jet2 r;
  r.value_ = u.value_ - v.value_;
  r.grad_ = u.grad_ - v.grad_;
  r.has_hess_ = u.has_hess_ && v.has_hess_;
  if (r.has_hess_) r.hess_ = u.hess_ - v.hess_;
  return r;
}

Jet2 operator*(const Jet2& u, const Jet2& v) {
  require_same_n(u, v);
  const std::size_t n = u.n();
  Jet2 r;
  r.value_ = u.value_ * v.value_;
  r.grad_ = IntervalVector(n);
  for (std::size_t i = 0; i < n; ++i) r.grad_[i] = u.value_ * v.grad_[i] + v.value_ * u.grad_[i];
  r.has_hess_ = u.has_hess_ && v.has_hess_;
  if (r.has_hess_) {
    r.hess_ = IntervalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const Interval h = u.value_ * v.hess_(i, j) + v.value_ * u.hess_(i, j) +
                           u.grad_[i] * v.grad_[j] + v.grad_[i] * u.grad_[j];
        r.hess_(i, j) = h;
        r.hess_(j, i) = h;
      }
    }
  }
  return r;
}

Jet2 operator*(const Interval& c, const Jet2& u) {
  Jet2 r = u;
  r.value_ = c * u.value_;
  r.grad_ = c * u.grad_;
  if (r.has_hess_) r.hess_ = c * u.hess_;
  return r;
}

Jet2 operator*(const Jet2& u, const Interval& c) { return c * u; }

Jet2 operator+(const Interval& c, const Jet2& u) {
  Jet2 r = u;
  r.value_ = c + u.value_;
  return r;
}

Jet2 operator+(const Jet2& u, const Interval& c) { return c + u; }
Jet2 operator-(const Interval& c, const Jet2& u) { return c + (-u); }
Jet2 operator-(const Jet2& u, const Interval& c) { return (-c) + u; }

Jet2 apply_unary(const Jet2& u, const Interval& f, const Interval& df, const Interval& d2f) {
  const std::size_t n = u.n();
  Jet2 r;
  r.value_ = f;
  r.grad_ = df * u.grad_;
  r.has_hess_ = u.has_hess_;
  if (r.has_hess_) {
    r.hess_ = IntervalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const Interval h = df * u.hess_(i, j) + d2f * (u.grad_[i] * u.grad_[j]);
        r.hess_(i, j) = h;
        r.hess_(j, i) = h;
      }
    }
  }
  return r;
}

Jet2 reciprocal(const Jet2& u) {
  const Interval& x = u.value();
  const Interval inv = Interval(1.0) / x;
  const Interval inv2 = sqr(inv);
  return apply_unary(u, inv, -inv2, Interval(2.0) * inv2 * inv);
}

Jet2 operator/(const Jet2& u, const Jet2& v) { return u * reciprocal(v); }

Jet2 operator/(const Jet2& u, const Interval& c) { return (Interval(1.0) / c) * u; }

Jet2 sqr(const Jet2& u) {
  const Interval& x = u.value();
  return apply_unary(u, sqr(x), Interval(2.0) * x, Interval(2.0));
}

Jet2 sqrt(const Jet2& u) {
  const Interval s = sqrt(u.value());
  if (s.contains_zero()) throw DomainError("sqrt jet at a point where sqrt is not differentiable");
  const Interval d = Interval(1.0) / (Interval(2.0) * s);
  const Interval d2 = -Interval(1.0) / (Interval(4.0) * s * u.value());
  return apply_unary(u, s, d, d2);
}

Jet2 sin(const Jet2& u) {
  const Interval s = sin(u.value());
  return apply_unary(u, s, cos(u.value()), -s);
}

Jet2 cos(const Jet2& u) {
  const Interval c = cos(u.value());
  return apply_unary(u, c, -sin(u.value()), -c);
}

Jet2 atan(const Jet2& u) {
  const Interval& x = u.value();
  const Interval d = Interval(1.0) / (Interval(1.0) + sqr(x));
  return apply_unary(u, atan(x), d, Interval(-2.0) * x * sqr(d));
}

Jet2& Jet2::operator+=(const Jet2& rhs) { return *this = *this + rhs; }
Jet2& Jet2::operator-=(const Jet2& rhs) { return *this = *this - rhs; }
Jet2& Jet2::operator*=(const Jet2& rhs) { return *this = *this * rhs; }
Jet2& Jet2::operator/=(const Jet2& rhs) { return *this = *this / rhs; }

std::ostream& operator<<(std::ostream& os, const Jet2& j) {
  os << "{value: " << j.value() << ", grad: " << j.grad();
  if (j.has_hessian()) os << ", hess: " << j.hess();
  return os << '}';
}

}  // namespace tangency
