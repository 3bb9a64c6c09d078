#include <doctest.h>

#include <cmath>

#include "properties.hpp"
#include "tangency/errors.hpp"
#include "tangency/jet.hpp"

using namespace tangency;

TEST_CASE("variable jets") {
  const Jet2 x = Jet2::variable(0, Interval(2.0), 2);
  CHECK(x.value() == Interval(2.0));
  CHECK(x.grad(0) == Interval(1.0));
  CHECK(x.grad(1) == Interval(0.0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(x.hess(i, j) == Interval(0.0));

  const Interval a(1.3145271093265 - 1e-5, 1.3145271093265 + 1e-5);
  const Jet2 p = Jet2::variable(1, a, 4);
  CHECK(p.grad(1) == Interval(1.0));
  CHECK(p.grad(0) == Interval(0.0));
  CHECK(p.grad(3) == Interval(0.0));
}

TEST_CASE("variable index out of range") { CHECK_THROWS_AS(Jet2::variable(2, Interval(1.0), 2), ShapeError); }

TEST_CASE("square of a variable") {
  const Jet2 s = sqr(Jet2::variable(0, Interval(1.0), 1));
  CHECK(s.value() == Interval(1.0));
  CHECK(s.grad(0) == Interval(2.0));
  CHECK(s.hess(0, 0) == Interval(2.0));
}

TEST_CASE("product of two variables") {
  const Jet2 x = Jet2::variable(0, Interval(3.0), 2);
  const Jet2 y = Jet2::variable(1, Interval(5.0), 2);
  const Jet2 p = x * y;
  CHECK(p.grad(0) == Interval(5.0));
  CHECK(p.grad(1) == Interval(3.0));
  CHECK(p.hess(0, 1) == Interval(1.0));
  CHECK(p.hess(1, 0) == Interval(1.0));
  CHECK(p.hess(0, 0) == Interval(0.0));
}

TEST_CASE("Henon first component has one nonzero second derivative") {
  const Interval b(-0.3);
  const Jet2 x = Jet2::variable(0, Interval(0.4, 0.6), 3);
  const Jet2 y = Jet2::variable(1, Interval(-0.1, 0.1), 3);
  const Jet2 a = Jet2::variable(2, Interval(1.3, 1.4), 3);
  const Jet2 h = a - sqr(x) + b * y;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == 0 && j == 0) {
        CHECK(h.hess(i, j) == Interval(-2.0));
      } else {
        CHECK(h.hess(i, j) == Interval(0.0));
      }
    }
  }
}

TEST_CASE("Hessian enclosures are symmetric") {
  const Jet2 x = Jet2::variable(0, Interval(0.7, 0.8), 2);
  const Jet2 y = Jet2::variable(1, Interval(1.1, 1.2), 2);
  const Jet2 f = sin(x * y) / (Interval(1.0) + sqr(y)) + atan(x / y);
  CHECK(f.hess(0, 1) == f.hess(1, 0));
}

TEST_CASE("sin jet against central differences") {
  const double x0 = 0.83;
  const double h = 1e-5;
  const Jet2 s = sin(Jet2::variable(0, Interval(x0), 1));
  const double fd1 = (std::sin(x0 + h) - std::sin(x0 - h)) / (2 * h);
  const double fd2 = (std::sin(x0 + h) - 2 * std::sin(x0) + std::sin(x0 - h)) / (h * h);
  CHECK(std::fabs(fd1 - s.grad(0).mid()) <= s.grad(0).width() + 1e-9);
  CHECK(std::fabs(fd2 - s.hess(0, 0).mid()) <= s.hess(0, 0).width() + 1e-5);
}

TEST_CASE("first-order jets") {
  const Jet2 x = Jet2::variable(0, Interval(0.5), 2);
  const Jet2 y = Jet2::variable(1, Interval(2.0), 2);
  const Jet2 f = x * sqr(y);
  const Jet2 fx = f.partial(0);  // y^2
  CHECK(fx.value() == Interval(4.0));
  CHECK_FALSE(fx.has_hessian());
  CHECK(fx.grad(1) == Interval(4.0));
  CHECK_THROWS_AS((void)fx.hess(), ShapeError);
  const Jet2 g = fx * x;  // still first order
  CHECK_FALSE(g.has_hessian());
  CHECK(g.grad(0) == Interval(4.0));
}

TEST_CASE("enclosure monotonicity in the input box") {
  const Jet2 small = atan(Jet2::variable(0, Interval(0.9, 1.0), 1)) * cos(Jet2::variable(0, Interval(0.9, 1.0), 1));
  const Jet2 big = atan(Jet2::variable(0, Interval(0.5, 1.5), 1)) * cos(Jet2::variable(0, Interval(0.5, 1.5), 1));
  CHECK(small.value().subset_of(big.value()));
  CHECK(small.grad(0).subset_of(big.grad(0)));
  CHECK(small.hess(0, 0).subset_of(big.hess(0, 0)));
}

TEST_CASE("domain errors propagate") {
  CHECK_THROWS_AS(sqrt(Jet2::variable(0, Interval(-1.0, 1.0), 1)), DomainError);
  CHECK_THROWS_AS(Jet2::constant(Interval(1.0), 1) / Jet2::variable(0, Interval(-1.0, 1.0), 1), DomainError);
}

TEST_CASE("50-expression corpus against high-precision finite differences") {
  const auto r = testing::jet_finite_difference_corpus(10, 21);
  INFO(r.first_violation);
  CHECK(r.violations == 0);
  CHECK(r.checks == testing::kJetCorpusSize * 10 * 13);
}
