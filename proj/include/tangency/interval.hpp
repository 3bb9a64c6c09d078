#ifndef TANGENCY_INTERVAL_HPP
#define TANGENCY_INTERVAL_HPP

#include <iosfwd>
#include <string_view>

namespace tangency {

// Closed interval [lo, hi] with finite binary64 bounds.
//
// Every operation returns an enclosure of the exact real result. Rounding is
// done in the default round-to-nearest mode: the rounding error of each
// primitive (+, -, *, /, sqrt) is recovered exactly with an error-free
// transformation and the bound is moved one ulp outward only when the
// primitive was inexact. No FPU mode switching takes place, so the type is
// safe to use from any number of threads.
class Interval {
 public:
  constexpr Interval() noexcept = default;
  // Degenerate interval. Implicit so that mixed expressions like 2.0 * x read
  // naturally; throws DomainError for non-finite input.
  Interval(double value);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  // Tight enclosure of a decimal literal such as "1.3145271093265".
  static Interval from_decimal(std::string_view text);
  // Smallest interval containing both arguments.
  static Interval hull(const Interval& a, const Interval& b);
  // [-r, r].
  static Interval symmetric(double r);

  [[nodiscard]] double lo() const noexcept { return lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  // Midpoint rounded to nearest; always inside the interval.
  [[nodiscard]] double mid() const noexcept;
  // Upward-rounded radius: [mid - rad, mid + rad] contains *this.
  [[nodiscard]] double rad() const;
  // Upward-rounded hi - lo.
  [[nodiscard]] double width() const;
  // max |x| over the interval.
  [[nodiscard]] double mag() const noexcept;
  // min |x| over the interval.
  [[nodiscard]] double mig() const noexcept;

  [[nodiscard]] bool is_point() const noexcept { return lo_ == hi_; }
  [[nodiscard]] bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  [[nodiscard]] bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  // *this is a subset of other.
  [[nodiscard]] bool subset_of(const Interval& other) const noexcept {
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }
  // *this lies in the open interior of other.
  [[nodiscard]] bool interior_of(const Interval& other) const noexcept {
    return other.lo_ < lo_ && hi_ < other.hi_;
  }
  [[nodiscard]] bool overlaps(const Interval& other) const noexcept {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }
  [[nodiscard]] bool certainly_positive() const noexcept { return lo_ > 0.0; }
  [[nodiscard]] bool certainly_negative() const noexcept { return hi_ < 0.0; }

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
Interval operator/(const Interval& x, const Interval& y);
Interval operator-(const Interval& x);

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval atan(const Interval& x);
// Nonnegative integer power by repeated squaring; sign-aware for even n.
Interval pow(const Interval& x, unsigned n);
// Intersection; throws DomainError when empty.
Interval intersect(const Interval& a, const Interval& b);

// Enclosures of pi and pi/2.
Interval pi();
Interval half_pi();

std::ostream& operator<<(std::ostream& os, const Interval& x);

// Directed-rounding primitives on binary64, exposed for code that needs a
// single rigorous bound without building an interval.
namespace rounding {
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);
double next_down(double a);
double next_up(double a);
}  // namespace rounding

}  // namespace tangency

#endif  // TANGENCY_INTERVAL_HPP
