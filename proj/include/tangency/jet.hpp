#ifndef TANGENCY_JET_HPP
#define TANGENCY_JET_HPP

#include <cstddef>
#include <iosfwd>

#include "tangency/interval.hpp"
#include "tangency/linalg.hpp"

namespace tangency {

// Value, gradient and Hessian enclosures of a function of n variables,
// propagated through arithmetic with the first- and second-order chain rules.
//
// A jet built with first_order() carries no Hessian; results that depend on
// it are first order as well, and asking them for a Hessian throws. Gradients
// never depend on Hessians, so first-order jets still give rigorous
// gradients. This is how D(Pf) is obtained from D^2 f without third
// derivatives.
class Jet2 {
 public:
  Jet2() = default;
  // Constant jet.
  Jet2(const Interval& value, std::size_t n);

  static Jet2 variable(std::size_t index, const Interval& value, std::size_t n);
  static Jet2 constant(const Interval& value, std::size_t n) { return Jet2(value, n); }
  static Jet2 first_order(const Interval& value, IntervalVector grad);
  static Jet2 second_order(const Interval& value, IntervalVector grad, IntervalMatrix hess);

  [[nodiscard]] std::size_t n() const noexcept { return grad_.size(); }
  [[nodiscard]] const Interval& value() const noexcept { return value_; }
  [[nodiscard]] const IntervalVector& grad() const noexcept { return grad_; }
  [[nodiscard]] const Interval& grad(std::size_t i) const { return grad_[i]; }
  [[nodiscard]] bool has_hessian() const noexcept { return has_hess_; }
  // Throws ShapeError for a first-order jet.
  [[nodiscard]] const IntervalMatrix& hess() const;
  [[nodiscard]] const Interval& hess(std::size_t i, std::size_t j) const;

  // The jet of the partial derivative d/dx_k: value grad[k], gradient equal to
  // row k of the Hessian. The result is first order.
  [[nodiscard]] Jet2 partial(std::size_t k) const;

  Jet2& operator+=(const Jet2& rhs);
  Jet2& operator-=(const Jet2& rhs);
  Jet2& operator*=(const Jet2& rhs);
  Jet2& operator/=(const Jet2& rhs);

 private:
  friend Jet2 operator+(const Jet2&, const Jet2&);
  friend Jet2 operator-(const Jet2&, const Jet2&);
  friend Jet2 operator-(const Jet2&);
  friend Jet2 operator*(const Jet2&, const Jet2&);
  friend Jet2 operator*(const Interval&, const Jet2&);
  friend Jet2 operator+(const Interval&, const Jet2&);
  friend Jet2 apply_unary(const Jet2&, const Interval&, const Interval&, const Interval&);

  Interval value_;
  IntervalVector grad_;
  IntervalMatrix hess_;
  bool has_hess_ = true;
};

Jet2 operator+(const Jet2& u, const Jet2& v);
Jet2 operator-(const Jet2& u, const Jet2& v);
Jet2 operator-(const Jet2& u);
Jet2 operator*(const Jet2& u, const Jet2& v);
Jet2 operator/(const Jet2& u, const Jet2& v);
Jet2 operator*(const Interval& c, const Jet2& u);
Jet2 operator*(const Jet2& u, const Interval& c);
Jet2 operator+(const Interval& c, const Jet2& u);
Jet2 operator+(const Jet2& u, const Interval& c);
Jet2 operator-(const Interval& c, const Jet2& u);
Jet2 operator-(const Jet2& u, const Interval& c);
Jet2 operator/(const Jet2& u, const Interval& c);

Jet2 sqr(const Jet2& u);
Jet2 sqrt(const Jet2& u);
Jet2 sin(const Jet2& u);
Jet2 cos(const Jet2& u);
Jet2 atan(const Jet2& u);
Jet2 reciprocal(const Jet2& u);

// Generic chain rule: phi(u) given enclosures of phi, phi', phi'' over the
// value range of u.
Jet2 apply_unary(const Jet2& u, const Interval& f, const Interval& df, const Interval& d2f);

std::ostream& operator<<(std::ostream& os, const Jet2& j);

}  // namespace tangency

#endif  // TANGENCY_JET_HPP
