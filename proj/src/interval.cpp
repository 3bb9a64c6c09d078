#include "tangency/interval.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>

#include "tangency/errors.hpp"

namespace tangency {

namespace rounding {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude the fma-based residuals may themselves be rounded, so
// the bound is widened unconditionally.
constexpr double kTiny = 0x1p-960;

}  // namespace

double next_down(double a) { return std::nextafter(a, -kInf); }
double next_up(double a) { return std::nextafter(a, kInf); }

namespace {

// Sign of the exact rounding error (exact - rounded) of a + b.
double two_sum_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

}  // namespace

double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return two_sum_error(a, b, s) < 0.0 ? next_down(s) : s;
}

double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return two_sum_error(a, b, s) > 0.0 ? next_up(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  if (a == 0.0 || b == 0.0) return 0.0;
  if (std::fabs(p) < kTiny) return next_down(p);
  return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  if (a == 0.0 || b == 0.0) return 0.0;
  if (std::fabs(p) < kTiny) return next_up(p);
  return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

namespace {

// Sign of exact(a / b) - fl(a / b).
int div_error_sign(double a, double b, double q) {
  const double r = std::fma(-q, b, a);
  if (r == 0.0) return 0;
  return ((r > 0.0) == (b > 0.0)) ? 1 : -1;
}

}  // namespace

double div_down(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  if (a == 0.0) return 0.0;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_down(q);
  return div_error_sign(a, b, q) < 0 ? next_down(q) : q;
}

double div_up(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  if (a == 0.0) return 0.0;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_up(q);
  return div_error_sign(a, b, q) > 0 ? next_up(q) : q;
}

double sqrt_down(double a) {
  const double s = std::sqrt(a);
  if (a == 0.0) return 0.0;
  if (a < kTiny) return std::max(0.0, next_down(s));
  return std::fma(-s, s, a) < 0.0 ? next_down(s) : s;
}

double sqrt_up(double a) {
  const double s = std::sqrt(a);
  if (a == 0.0) return 0.0;
  if (a < kTiny) return next_up(s);
  return std::fma(-s, s, a) > 0.0 ? next_up(s) : s;
}

}  // namespace rounding

using namespace rounding;

namespace {

Interval checked(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw OverflowError("interval bound overflowed");
  }
  return Interval(lo, hi);
}

}  // namespace

Interval::Interval(double value) : lo_(value), hi_(value) {
  if (!std::isfinite(value)) throw DomainError("non-finite interval value");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("non-finite interval bound");
  }
  if (lo > hi) throw DomainError("interval lower bound exceeds upper bound");
}

Interval Interval::from_decimal(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const double d = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(d)) {
    throw DomainError("cannot parse decimal '" + s + "'");
  }
  // Integers below 2^53 written without a fraction or exponent are exact.
  const bool plain_integer = s.find_first_of(".eE") == std::string::npos;
  if (plain_integer && std::fabs(d) < 0x1p53) return Interval(d);
  return Interval(next_down(d), next_up(d));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

Interval Interval::symmetric(double r) {
  const double m = std::fabs(r);
  return Interval(-m, m);
}

double Interval::mid() const noexcept {
  if (lo_ == hi_) return lo_;
  const double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

double Interval::rad() const {
  const double m = mid();
  return std::max(sub_up(hi_, m), sub_up(m, lo_));
}

double Interval::width() const { return sub_up(hi_, lo_); }

double Interval::mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }

double Interval::mig() const noexcept {
  if (contains_zero()) return 0.0;
  return std::min(std::fabs(lo_), std::fabs(hi_));
}

Interval& Interval::operator+=(const Interval& rhs) { return *this = *this + rhs; }
Interval& Interval::operator-=(const Interval& rhs) { return *this = *this - rhs; }
Interval& Interval::operator*=(const Interval& rhs) { return *this = *this * rhs; }
Interval& Interval::operator/=(const Interval& rhs) { return *this = *this / rhs; }

Interval operator+(const Interval& x, const Interval& y) {
  return checked(add_down(x.lo(), y.lo()), add_up(x.hi(), y.hi()));
}

Interval operator-(const Interval& x, const Interval& y) {
  return checked(sub_down(x.lo(), y.hi()), sub_up(x.hi(), y.lo()));
}

Interval operator-(const Interval& x) { return Interval(-x.hi(), -x.lo()); }

Interval operator*(const Interval& x, const Interval& y) {
  const std::array<double, 4> lows{mul_down(x.lo(), y.lo()), mul_down(x.lo(), y.hi()),
                                   mul_down(x.hi(), y.lo()), mul_down(x.hi(), y.hi())};
  const std::array<double, 4> highs{mul_up(x.lo(), y.lo()), mul_up(x.lo(), y.hi()),
                                    mul_up(x.hi(), y.lo()), mul_up(x.hi(), y.hi())};
  return checked(*std::min_element(lows.begin(), lows.end()),
                 *std::max_element(highs.begin(), highs.end()));
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw DomainError("division by an interval containing zero");
  const std::array<double, 4> lows{div_down(x.lo(), y.lo()), div_down(x.lo(), y.hi()),
                                   div_down(x.hi(), y.lo()), div_down(x.hi(), y.hi())};
  const std::array<double, 4> highs{div_up(x.lo(), y.lo()), div_up(x.lo(), y.hi()),
                                    div_up(x.hi(), y.lo()), div_up(x.hi(), y.hi())};
  return checked(*std::min_element(lows.begin(), lows.end()),
                 *std::max_element(highs.begin(), highs.end()));
}

Interval sqr(const Interval& x) {
  if (x.lo() >= 0.0) return checked(mul_down(x.lo(), x.lo()), mul_up(x.hi(), x.hi()));
  if (x.hi() <= 0.0) return checked(mul_down(x.hi(), x.hi()), mul_up(x.lo(), x.lo()));
  const double m = x.mag();
  return checked(0.0, mul_up(m, m));
}

Interval sqrt(const Interval& x) {
  if (x.lo() < 0.0) throw DomainError("sqrt of an interval reaching below zero");
  return Interval(sqrt_down(x.lo()), sqrt_up(x.hi()));
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, x.mag());
}

Interval pow(const Interval& x, unsigned n) {
  if (n == 0) return Interval(1.0);
  if (n % 2 == 0) return pow(sqr(x), n / 2);
  return x * pow(sqr(x), n / 2);
}

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw DomainError("empty interval intersection");
  return Interval(lo, hi);
}

Interval pi() {
  static const Interval value(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1);
  return value;
}

Interval half_pi() {
  static const Interval value(0x1.921fb54442d18p+0, 0x1.921fb54442d19p+0);
  return value;
}

namespace {

// pi/2 = kHalfPi1 + kHalfPi2 + tail, with kHalfPi1 and kHalfPi2 carrying 30
// significant bits so that k * kHalfPi{1,2} is exact for |k| < 2^23.
constexpr double kHalfPi1 = 0x1.921fb54000000p+0;
constexpr double kHalfPi2 = 0x1.10b4611800000p-30;
const Interval& half_pi_tail() {
  static const Interval tail(0x1.313198a2e0370p-61, 0x1.313198a2e0371p-61);
  return tail;
}
constexpr double kMaxReductionMultiple = 0x1p22;

constexpr int kSinTerms = 13;  // r^1 .. r^25
constexpr int kCosTerms = 13;  // r^0 .. r^24

double factorial_up(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f = mul_up(f, static_cast<double>(i));
  return f;
}

double factorial_down(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f = mul_down(f, static_cast<double>(i));
  return f;
}

// Enclosure of 1/n!.
Interval inverse_factorial(int n) {
  return Interval(div_down(1.0, factorial_up(n)), div_up(1.0, factorial_down(n)));
}

const std::array<Interval, kSinTerms>& sin_coefficients() {
  static const auto table = [] {
    std::array<Interval, kSinTerms> c{};
    for (int k = 0; k < kSinTerms; ++k) {
      const Interval f = inverse_factorial(2 * k + 1);
      c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? f : -f;
    }
    return c;
  }();
  return table;
}

const std::array<Interval, kCosTerms>& cos_coefficients() {
  static const auto table = [] {
    std::array<Interval, kCosTerms> c{};
    for (int k = 0; k < kCosTerms; ++k) {
      const Interval f = inverse_factorial(2 * k);
      c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? f : -f;
    }
    return c;
  }();
  return table;
}

// Upper bound of m^n / n!.
double taylor_remainder(double m, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p = mul_up(p, m);
  return div_up(p, factorial_down(n));
}

// sin over the interval r, |r| <= pi/4 + small.
Interval sin_series(const Interval& r) {
  const auto& c = sin_coefficients();
  const Interval r2 = sqr(r);
  Interval p = c.back();
  for (int k = kSinTerms - 2; k >= 0; --k) p = p * r2 + c[static_cast<std::size_t>(k)];
  return r * p + Interval::symmetric(taylor_remainder(r.mag(), 2 * kSinTerms + 1));
}

Interval cos_series(const Interval& r) {
  const auto& c = cos_coefficients();
  const Interval r2 = sqr(r);
  Interval p = c.back();
  for (int k = kCosTerms - 2; k >= 0; --k) p = p * r2 + c[static_cast<std::size_t>(k)];
  return p + Interval::symmetric(taylor_remainder(r.mag(), 2 * kCosTerms));
}

struct Reduced {
  int quadrant;  // k mod 4
  Interval r;    // x - k pi/2
};

// Returns false when x is too large for exact Cody-Waite reduction.
bool reduce(double x, Reduced& out) {
  const double k = std::nearbyint(x * 0x1.45f306dc9c883p-1);  // x * 2/pi
  if (std::fabs(k) > kMaxReductionMultiple) return false;
  const Interval kk(k);
  out.r = Interval(x) - kk * Interval(kHalfPi1) - kk * Interval(kHalfPi2) - kk * half_pi_tail();
  const auto ki = static_cast<long long>(k);
  out.quadrant = static_cast<int>(((ki % 4) + 4) % 4);
  return true;
}

const Interval kUnitRange(-1.0, 1.0);

Interval sin_point(double x) {
  Reduced red;
  if (!reduce(x, red)) return kUnitRange;
  switch (red.quadrant) {
    case 0: return sin_series(red.r);
    case 1: return cos_series(red.r);
    case 2: return -sin_series(red.r);
    default: return -cos_series(red.r);
  }
}

Interval cos_point(double x) {
  Reduced red;
  if (!reduce(x, red)) return kUnitRange;
  switch (red.quadrant) {
    case 0: return cos_series(red.r);
    case 1: return -sin_series(red.r);
    case 2: return -cos_series(red.r);
    default: return sin_series(red.r);
  }
}

// True unless it is certain that no point offset + 2 pi m lies in x.
bool may_contain_periodic(const Interval& x, const Interval& offset) {
  const Interval q = (x - offset) / (Interval(2.0) * pi());
  return std::floor(q.hi()) >= std::ceil(q.lo());
}

Interval clamp_unit(const Interval& v) {
  return Interval(std::max(v.lo(), -1.0), std::min(v.hi(), 1.0));
}

constexpr int kAtanTerms = 13;

// atan over y with 0 <= y <= 1 (plus rounding slack).
Interval atan_unit(Interval y) {
  // atan(y) = 2 atan(y / (1 + sqrt(1 + y^2))); three halvings bring y below
  // tan(pi/32) < 0.0985.
  for (int i = 0; i < 3; ++i) y = y / (Interval(1.0) + sqrt(Interval(1.0) + sqr(y)));
  const Interval y2 = sqr(y);
  Interval p = Interval(1.0) / Interval(2.0 * kAtanTerms - 1.0);
  if ((kAtanTerms - 1) % 2 == 1) p = -p;
  for (int k = kAtanTerms - 2; k >= 0; --k) {
    Interval c = Interval(1.0) / Interval(2.0 * k + 1.0);
    if (k % 2 == 1) c = -c;
    p = p * y2 + c;
  }
  // Alternating series: the first omitted term bounds the remainder.
  double m = y.mag();
  double rem = 1.0;
  for (int i = 0; i < 2 * kAtanTerms + 1; ++i) rem = mul_up(rem, m);
  rem = div_up(rem, 2.0 * kAtanTerms + 1.0);
  return Interval(8.0) * (y * p + Interval::symmetric(rem));
}

Interval atan_point(double x) {
  if (x == 0.0) return Interval(0.0);
  const double y = std::fabs(x);
  Interval result;
  if (y > 1.0) {
    result = half_pi() - atan_unit(Interval(1.0) / Interval(y));
  } else {
    result = atan_unit(Interval(y));
  }
  return x < 0.0 ? -result : result;
}

}  // namespace

Interval sin(const Interval& x) {
  if (x.width() >= 6.0) return kUnitRange;
  Interval result = Interval::hull(sin_point(x.lo()), sin_point(x.hi()));
  double lo = result.lo();
  double hi = result.hi();
  if (may_contain_periodic(x, half_pi())) hi = 1.0;
  if (may_contain_periodic(x, -half_pi())) lo = -1.0;
  return clamp_unit(Interval(lo, hi));
}

Interval cos(const Interval& x) {
  if (x.width() >= 6.0) return kUnitRange;
  Interval result = Interval::hull(cos_point(x.lo()), cos_point(x.hi()));
  double lo = result.lo();
  double hi = result.hi();
  if (may_contain_periodic(x, Interval(0.0))) hi = 1.0;
  if (may_contain_periodic(x, pi())) lo = -1.0;
  return clamp_unit(Interval(lo, hi));
}

Interval atan(const Interval& x) {
  const Interval a = atan_point(x.lo());
  const Interval b = x.is_point() ? a : atan_point(x.hi());
  const double lim = half_pi().hi();
  return Interval(std::max(a.lo(), -lim), std::min(b.hi(), lim));
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  const auto old = os.precision(17);
  os << '[' << x.lo() << ", " << x.hi() << ']';
  os.precision(old);
  return os;
}

}  // namespace tangency
