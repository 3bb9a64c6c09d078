#include <doctest.h>

#include <cmath>
#include <random>

#include "tangency/errors.hpp"
#include "tangency/toy_model.hpp"

using namespace tangency;

TEST_CASE("linear slope map derivative at the origin") {
  const ToyModelParams p;
  const SlopeMap f(toy_map_linear(p), SlopeChart::horizontal, SlopeChart::horizontal, Interval(-0.5, 0.5),
                   Interval(-2, 2));
  const IntervalMatrix d = f.jacobian(IntervalVector(4));
  const double diag[4] = {p.lambda, p.mu, p.mu / p.lambda, 1.0};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(d(i, j).contains(i == j ? diag[i] : 0.0));
  // vertical charts invert the slope ratio
  const SlopeMap g(toy_map_linear(p), SlopeChart::vertical, SlopeChart::vertical, Interval(-0.5, 0.5),
                   Interval(-2, 2));
  CHECK(g.jacobian(IntervalVector(4))(2, 2).contains(p.lambda / p.mu));
}

TEST_CASE("switch map sends (1, 0) to (0, 1) and flips the slope") {
  const SlopeMap sw(toy_map_switch(), SlopeChart::horizontal, SlopeChart::vertical, Interval(0.5, 1.5),
                    Interval(-0.5, 0.5));
  const IntervalVector img = sw.image(IntervalVector{Interval(1.0), Interval(0.0), Interval(0.3), Interval(0.0)});
  CHECK(img[0] == Interval(0.0));
  CHECK(img[1] == Interval(1.0));
  CHECK(img[2].contains(-0.3));
  CHECK(img[3] == Interval(0.0));
  CHECK_THROWS_AS((void)sw.image(IntervalVector{Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0)}), DomainError);
  CHECK_THROWS_AS((void)sw.image(IntervalVector(3)), ShapeError);
  const PlanarMapFamily f = toy_map_switch();
  CHECK(inverse_consistent(f, Interval(0.9, 1.1), Interval(-0.1, 0.1), Interval(-0.01, 0.01)));
}

TEST_CASE("transversality determinant examples") {
  CHECK(transversality_determinant(Interval(1), Interval(1), Interval(5)).contains(1.0));
  CHECK(transversality_determinant(Interval(2), Interval(3), Interval(7)).contains(6.0));
  CHECK(transversality_determinant(Interval(0), Interval(5), Interval(1)).contains(0.0));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const Interval ga(u(rng)), gtt(u(rng)), gta(u(rng));
    CHECK((transversality_determinant(ga, gtt, gta) - ga * gtt).contains_zero());
  }
}

TEST_CASE("default toy check passes") {
  const ToyReport r = check_toy(ToyModelParams{});
  CHECK(r.chain.passed);
  CHECK(r.chain.certificates.size() == 7);
  CHECK(r.linear_cones.passed);
  CHECK(r.switch_cone_at_center.positive_definite);
  CHECK(r.switch_block_1.positive_definite);
  CHECK(r.switch_block_2.positive_definite);
  CHECK(r.switch_cone_radius > 0.0);
  CHECK(r.determinant_samples == 1000);
  CHECK(r.determinant_failures == 0);
  CHECK(r.passed);
}

TEST_CASE("toy check over other admissible parameters") {
  for (const ToyModelParams p : {ToyModelParams{3.0, 0.25, 0.5, 0.01}, ToyModelParams{2.5, 0.4, 0.4, 0.02},
                                 ToyModelParams{-2.0, 0.5, 0.5, 0.01}, ToyModelParams{4.0, -0.3, 0.3, 0.05}}) {
    INFO("lambda " << p.lambda << " mu " << p.mu << " Delta " << p.delta);
    const ToyReport r = check_toy(p, 4, 4, 10);
    CHECK(r.chain.passed);
    CHECK(r.linear_cones.passed);
  }
}

TEST_CASE("random valid parameters: certified or reported infeasible") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> lam(1.2, 6.0), mu(0.05, 0.95), dl(0.05, 0.95), eps(0.001, 0.09);
  std::bernoulli_distribution flip(0.5);
  int certified = 0;
  for (int i = 0; i < 60; ++i) {
    const ToyModelParams p{flip(rng) ? -lam(rng) : lam(rng), flip(rng) ? -mu(rng) : mu(rng), dl(rng), eps(rng)};
    INFO("lambda " << p.lambda << " mu " << p.mu << " Delta " << p.delta << " epsilon " << p.epsilon);
    try {
      const ToyReport r = check_toy(p, 3, 3, 10);
      CHECK(r.chain.passed);
      CHECK(r.linear_cones.passed);
      ++certified;
    } catch (const ConfigError&) {
      // the box inequalities have no solution inside the declared neighborhoods
    }
  }
  CHECK(certified >= 30);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ToyModelParams{1.0, 0.5, 0.5, 0.01}.validate()), ConfigError);
  CHECK_THROWS_AS((ToyModelParams{2.0, 1.0, 0.5, 0.01}.validate()), ConfigError);
  CHECK_THROWS_AS((ToyModelParams{2.0, 0.0, 0.5, 0.01}.validate()), ConfigError);
  CHECK_THROWS_AS((ToyModelParams{2.0, 0.5, 1.0, 0.01}.validate()), ConfigError);
  CHECK_THROWS_AS((ToyModelParams{2.0, 0.5, 0.5, 0.0}.validate()), ConfigError);
  CHECK_THROWS_AS(build_toy_chain(ToyModelParams{}, 0, 3), ConfigError);
  ToyFormScheme bad;
  bad.beta_ratio = 0.0;
  CHECK_THROWS_AS(build_toy_chain(ToyModelParams{}, 3, 3, bad), ConfigError);
}

TEST_CASE("toy chain layout") {
  const ToyChain ch = build_toy_chain(ToyModelParams{}, 3, 2);
  REQUIRE(ch.sets.size() == 7);
  CHECK(ch.sets[0].name() == "N0");
  CHECK(ch.sets[3].name() == "N3");
  CHECK(ch.sets[4].name() == "M2");
  CHECK(ch.sets[6].name() == "M0");
  CHECK(ch.switch_link == 3);
  CHECK(ch.link_maps.size() == 6);
  // beta grows along the N sets, D shrinks along the links of the M sets
  CHECK(ch.forms[1][3] > ch.forms[0][3]);
  CHECK(-ch.forms[5][3] < -ch.forms[4][3]);
  for (std::size_t i = 0; i < ch.sets.size(); ++i) CHECK_NOTHROW(ch.sets[i].require_compatible(ch.forms[i]));
}
