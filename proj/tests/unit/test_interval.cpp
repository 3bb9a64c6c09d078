#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "properties.hpp"
#include "tangency/errors.hpp"
#include "tangency/interval.hpp"
#include "tangency/linalg.hpp"

using namespace tangency;
using tangency::testing::encloses;
using tangency::testing::Rational;
using tangency::testing::Real;

TEST_CASE("construction rejects invalid bounds") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(Interval(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(Interval::from_decimal("1.2.3"), DomainError);
}

TEST_CASE("addition examples") {
  CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
  const Interval x(-0.75, 3.5);
  CHECK(Interval(0.0) + x == x);
  const Interval s = Interval(0.1) + Interval(0.2);
  CHECK(s.lo() < s.hi());
  CHECK(encloses(s, Rational(0.1) + Rational(0.2)));
}

TEST_CASE("multiplication, division and sqrt examples") {
  CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
  CHECK(sqrt(Interval(4, 9)) == Interval(2, 3));
  CHECK_THROWS_AS(Interval(1.0) / Interval(-1, 1), DomainError);
  CHECK_THROWS_AS(sqrt(Interval(-1e-300, 1)), DomainError);
  CHECK(sqr(Interval(-2, 3)) == Interval(0, 9));
}

TEST_CASE("overflow to a non-finite bound is an error") {
  const double big = std::numeric_limits<double>::max();
  CHECK_THROWS_AS(Interval(big) + Interval(big), OverflowError);
  CHECK_THROWS_AS(Interval(big) * Interval(2.0), OverflowError);
}

TEST_CASE("decimal parsing encloses the decimal value") {
  const Interval a = Interval::from_decimal("1.3145271093265");
  CHECK(encloses(a, Rational(13145271093265LL, 10000000000000LL)));
  CHECK(a.width() <= 4.5e-16);
  const Interval b = Interval::from_decimal("-0.3");
  CHECK(encloses(b, Rational(-3, 10)));
  CHECK(Interval::from_decimal("2").is_point());
  CHECK(Interval::from_decimal("0.5").contains(0.5));
}

TEST_CASE("sin over [0, pi] reaches 1") {
  const Interval s = sin(Interval(0.0, pi().hi()));
  CHECK(s.hi() == 1.0);
  CHECK(s.lo() <= 0.0);
  // dense sampling stays inside
  for (int i = 0; i <= 1000; ++i) {
    const double x = pi().lo() * i / 1000.0;
    CHECK(s.contains(std::sin(x)));
  }
}

TEST_CASE("elementary functions against 50-digit values") {
  const Real exact_half_pi = boost::math::constants::half_pi<Real>();
  CHECK(encloses(pi(), boost::math::constants::pi<Real>()));
  CHECK(encloses(half_pi(), exact_half_pi));
  CHECK(encloses(atan(Interval(1.0)), boost::math::constants::pi<Real>() / 4));
  CHECK(encloses(cos(Interval(1e5)), cos(Real(1e5))));
  CHECK(encloses(sin(Interval(-3e6)), sin(Real(-3e6))));
  CHECK(atan(Interval(1e300)).hi() <= half_pi().hi());
}

TEST_CASE("elementary function width on point inputs stays within 16 ulp") {
  for (double x : {0.1, 0.7, 1.3, 2.9, 100.0, -5.5}) {
    for (const Interval& r : {sin(Interval(x)), cos(Interval(x)), atan(Interval(x)), sqrt(Interval(std::fabs(x)))}) {
      const double ulp = std::nextafter(r.mag(), INFINITY) - r.mag();
      CHECK(r.width() <= 16 * ulp);
    }
  }
}

TEST_CASE("point soundness on sampled pairs") {
  const auto r = testing::interval_point_soundness(20000, 11);
  INFO(r.first_violation);
  CHECK(r.violations == 0);
  CHECK(r.checks > 170000);
}

TEST_CASE("inclusion monotonicity on nested intervals") {
  const auto r = testing::interval_monotonicity(20000, 12);
  INFO(r.first_violation);
  CHECK(r.violations == 0);
}

TEST_CASE("matrix product against exact rationals") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a(4, 4), b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = u(rng);
        b(i, j) = u(rng);
      }
    const IntervalMatrix p = mat_mul(to_interval(a), to_interval(b));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Rational e = 0;
        for (std::size_t k = 0; k < 4; ++k) e += Rational(a(i, k)) * Rational(b(k, j));
        CHECK(encloses(p(i, j), e));
      }
  }
}

TEST_CASE("identity products and transposes") {
  const IntervalMatrix a{{Interval(1, 2), Interval(-3)}, {Interval(0.5), Interval(4, 5)}};
  const IntervalMatrix i = to_interval(Matrix::identity(2));
  const IntervalMatrix p = mat_mul(i, a);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(a(r, c).subset_of(p(r, c)));
  CHECK(transpose(a)(0, 1) == a(1, 0));
  const IntervalMatrix pt = mat_mul(to_interval(Matrix{{1, 2}, {3, 4}}), to_interval(Matrix{{5, 6}, {7, 8}}));
  CHECK(pt(0, 0) == Interval(19));
  CHECK(pt(1, 1) == Interval(50));
  CHECK_THROWS_AS(mat_mul(a, to_interval(Matrix(3, 3))), ShapeError);
}

TEST_CASE("det4 examples and exact oracle") {
  CHECK(det4(to_interval(Matrix::identity(4))) == Interval(1.0));
  const IntervalMatrix t{{Interval(1), Interval(0), Interval(1), Interval(0)},
                         {Interval(0), Interval(1), Interval(0), Interval(1)},
                         {Interval(0), Interval(0), Interval(2), Interval(0)},
                         {Interval(0), Interval(0), Interval(7), Interval(3)}};
  CHECK(det4(t).contains(6.0));
  CHECK_THROWS_AS(det4(to_interval(Matrix::identity(3))), ShapeError);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = u(rng);
    // Rational Gaussian elimination.
    std::vector<std::vector<Rational>> r(4, std::vector<Rational>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r[i][j] = Rational(m(i, j));
    Rational det = 1;
    for (std::size_t c = 0; c < 4; ++c) {
      std::size_t p = c;
      while (p < 4 && r[p][c] == 0) ++p;
      REQUIRE(p < 4);
      if (p != c) {
        std::swap(r[p], r[c]);
        det = -det;
      }
      det *= r[c][c];
      for (std::size_t i = c + 1; i < 4; ++i) {
        const Rational f = r[i][c] / r[c][c];
        for (std::size_t j = c; j < 4; ++j) r[i][j] -= f * r[c][j];
      }
    }
    CHECK(encloses(det4(to_interval(m)), det));
  }
}

TEST_CASE("inverse enclosure examples") {
  const IntervalMatrix id = inverse_enclosure(Matrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(id(i, i).contains(1.0));
  const IntervalMatrix d = inverse_enclosure(Matrix{{2.0, 0.0}, {0.0, 0.5}});
  CHECK(d(0, 0).contains(0.5));
  CHECK(d(1, 1).contains(2.0));
  CHECK(d(0, 1).contains(0.0));
  CHECK_THROWS_AS(inverse_enclosure(Matrix{{1.0, 2.0}, {2.0, 4.0}}), SingularMatrixError);
}

TEST_CASE("inverse enclosure of the eigenvector frame at the fixed point") {
  // Columns u0 and s0 of the Henon fixed point at a = 1.3145271093265, b = -0.3.
  const double b = -0.3;
  const double a = 1.3145271093265;
  const double x0 = 0.5 * (b - std::sqrt((b - 1) * (b - 1) + 4 * a) - 1);
  const double r = std::sqrt(x0 * x0 + b);
  const double nu = std::hypot(-x0 + r, 1.0);
  const double ns = std::hypot(-x0 - r, 1.0);
  const Matrix m{{(-x0 + r) / nu, -(-x0 - r) / ns, 0, 0}, {1 / nu, -1 / ns, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const IntervalMatrix inv = inverse_enclosure(m);
  const IntervalMatrix res = to_interval(Matrix::identity(4)) - mat_mul(to_interval(m), inv);
  CHECK(inf_norm_bound(res) < 1e-12);
}

TEST_CASE("norm bound and vector helpers") {
  const IntervalVector v{Interval(3.0), Interval(-4.0, 4.0)};
  CHECK(norm_bound(v) >= 5.0);
  CHECK(norm_bound(v) <= 5.0 + 1e-14);
  CHECK(dot(v, v).contains(25.0));
  CHECK_THROWS_AS(intersect(Interval(0, 1), Interval(2, 3)), DomainError);
}
