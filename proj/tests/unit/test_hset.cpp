#include <doctest.h>

#include <cmath>
#include <random>

#include "tangency/errors.hpp"
#include "tangency/henon.hpp"
#include "tangency/hset.hpp"

using namespace tangency;

namespace {

HSet rotated_box() {
  const double c = std::cos(0.4), s = std::sin(0.4);
  return HSet("R", Vector{1.0, -2.0, 0.5}, Matrix{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}, Vector{0.1, 0.2, 0.3},
              {0, 2});
}

const HenonChain& chain() {
  static const HenonChain ch = build_chain(HenonProofData::defaults(), 1e-5);
  return ch;
}

}  // namespace

TEST_CASE("normalized coordinates of the center and of an axis tip") {
  const HSet n = rotated_box();
  const IntervalVector z = n.to_normalized(to_interval(n.center()));
  for (const auto& x : z) CHECK(x.contains(0.0));
  IntervalVector e(3);
  e[0] = Interval(n.diameters()[0]);
  const IntervalVector tip = n.from_local(e);
  const IntervalVector zt = n.to_normalized(tip);
  CHECK(zt[0].contains(1.0));
  CHECK(zt[1].contains(0.0));
}

TEST_CASE("sampled interior points of N3 certify membership") {
  const HSet& n3 = chain().sets[3];
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  for (int i = 0; i < 500; ++i) {
    // Direct affine image computed in double, away from the faces.
    Vector p = n3.center();
    for (std::size_t j = 0; j < 4; ++j) {
      const double w = u(rng) * n3.diameters()[j];
      for (std::size_t r = 0; r < 4; ++r) p[r] += n3.coord_matrix()(r, j) * w;
    }
    CHECK(n3.certainly_contains(to_interval(p)));
  }
  Vector outside = n3.center();
  outside[3] += 3.0 * n3.diameters()[3];
  CHECK_FALSE(n3.certainly_contains(to_interval(outside)));
}

TEST_CASE("round trip from normalized coordinates") {
  const HSet n = rotated_box();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const IntervalVector p{Interval(u(rng)), Interval(u(rng)), Interval(u(rng))};
    const IntervalVector back = n.from_normalized(n.to_normalized(p));
    for (std::size_t j = 0; j < 3; ++j) CHECK(p[j].subset_of(back[j]));
  }
}

TEST_CASE("walls cover the faces") {
  const HSet two("T", Vector{0.0, 0.0}, Matrix::identity(2), Vector{1.0, 1.0}, {0});
  const auto w = two.walls(0, 1, Grid{1, 1});
  REQUIRE(w.size() == 1);
  CHECK(w[0][0] == Interval(1.0));
  CHECK(w[0][1] == Interval(-1.0, 1.0));

  const HSet four("F", Vector(4), Matrix::identity(4), Vector{1, 1, 1, 1}, {0, 3});
  const auto faces = four.walls(3, -1, Grid{2, 2, 2, 2});
  CHECK(faces.size() == 8);
  IntervalVector h = faces.front();
  double volume = 0.0;
  for (const auto& b : faces) {
    h = hull(h, b);
    CHECK(b[3] == Interval(-1.0));
    volume += b[0].width() * b[1].width() * b[2].width();
  }
  for (std::size_t j = 0; j < 3; ++j) CHECK(h[j] == Interval(-1.0, 1.0));
  CHECK(volume == doctest::Approx(8.0));

  const auto uneven = four.walls(0, 1, Grid{1, 3, 5, 7});
  CHECK(uneven.size() == 3 * 5 * 7);
  IntervalVector hu = uneven.front();
  for (const auto& b : uneven) hu = hull(hu, b);
  for (std::size_t j = 1; j < 4; ++j) CHECK(hu[j] == Interval(-1.0, 1.0));
}

TEST_CASE("wall errors") {
  const HSet n = rotated_box();
  CHECK_THROWS_AS((void)n.walls(0, 1, Grid{1, 0, 1}), ShapeError);
  CHECK_THROWS_AS((void)n.walls(1, 1, Grid{1, 1, 1}), ShapeError);
  CHECK_THROWS_AS((void)n.walls(0, 0, Grid{1, 1, 1}), ShapeError);
  CHECK_THROWS_AS((void)n.walls(0, 1, Grid{1, 1}), ShapeError);
  CHECK_THROWS_AS(split_unit(0), ShapeError);
}

TEST_CASE("split_unit pieces share breakpoints") {
  const auto p = split_unit(7);
  CHECK(p.front().lo() == -1.0);
  CHECK(p.back().hi() == 1.0);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i].lo() == p[i - 1].hi());
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(HSet("X", Vector{0, 0}, Matrix{{2, 0}, {0, 1}}, Vector{1, 1}, {0}), ConfigError);
  CHECK_THROWS_AS(HSet("X", Vector{0, 0}, Matrix::identity(2), Vector{1, 0}, {0}), ConfigError);
  CHECK_THROWS_AS(HSet("X", Vector{0, 0}, Matrix::identity(2), Vector{1, 1}, {0, 0}), ConfigError);
  CHECK_THROWS_AS(HSet("X", Vector{0, 0}, Matrix::identity(2), Vector{1, 1}, {2}), ConfigError);
  CHECK_THROWS_AS(HSet("X", Vector{0, 0}, Matrix::identity(3), Vector{1, 1}, {0}), ShapeError);
  const double r = std::sqrt(0.5);
  CHECK_THROWS_AS(HSet("X", Vector{0, 0}, Matrix{{r, r}, {r, r}}, Vector{1, 1}, {0}), SingularMatrixError);
}

TEST_CASE("quadratic form values") {
  // x^2 + a^2/4 - 4 y^2 - 2 v^2 in the order (x, a, y, v)
  const QuadraticForm q({1.0, 0.25, -4.0, -2.0});
  CHECK(local_q_value(q, IntervalVector{Interval(1), Interval(0), Interval(0), Interval(0)}) == Interval(1.0));
  CHECK(local_q_value(q, IntervalVector(4)) == Interval(0.0));
  const IntervalVector z{Interval(0.3), Interval(-1.2), Interval(0.7), Interval(2.0)};
  IntervalVector mz(4);
  for (std::size_t i = 0; i < 4; ++i) mz[i] = -z[i];
  CHECK(q.value(z) == q.value(mz));
  CHECK(q.alpha_norm() == 1.0);
  CHECK(q.beta_norm() == 4.0);
  CHECK(q.positive_axes() == std::vector<std::size_t>{0, 1});
  CHECK(q.negative_axes() == std::vector<std::size_t>{2, 3});
  CHECK(q.negated().positive_axes() == std::vector<std::size_t>{2, 3});
  CHECK(q.restricted({1, 3}).coeffs() == std::vector<double>{0.25, -2.0});
  CHECK_THROWS_AS(QuadraticForm({1.0, 0.0}), ConfigError);
}

TEST_CASE("form compatibility with the axis split") {
  const HSet n = rotated_box();
  CHECK_NOTHROW(n.require_compatible(QuadraticForm({1.0, -1.0, 2.0})));
  CHECK_THROWS_AS(n.require_compatible(QuadraticForm({1.0, 1.0, 2.0})), ConfigError);
  CHECK_THROWS_AS(n.require_compatible(QuadraticForm({1.0, -1.0})), ConfigError);
}

TEST_CASE("alpha norm of the stable end form is 0.3 / lambda^2") {
  const double lambda = 3.858169402;
  CHECK(chain().stable_form.alpha_norm() == doctest::Approx(0.3 / (lambda * lambda)).epsilon(1e-12));
  CHECK(chain().forms[15].alpha_norm() == doctest::Approx(0.3 / (lambda * lambda)).epsilon(1e-12));
}

TEST_CASE("restriction to a subset of axes") {
  const HSet n = rotated_box();
  const HSet r = n.restricted({0, 1}, "R01");
  CHECK(r.dimension() == 2);
  CHECK(r.unstable_axes() == std::vector<std::size_t>{0});
  CHECK(r.stable_axes() == std::vector<std::size_t>{1});
  CHECK(r.diameters()[1] == 0.2);
}
