#include <doctest.h>

#include <cmath>
#include <random>

#include "properties.hpp"
#include "tangency/cones.hpp"
#include "tangency/errors.hpp"
#include "tangency/toy_model.hpp"

using namespace tangency;

namespace {

class IdentityMap final : public VectorMap {
 public:
  explicit IdentityMap(std::size_t n) : n_(n) {}
  [[nodiscard]] std::size_t dimension() const override { return n_; }
  [[nodiscard]] IntervalVector image(const IntervalVector& box) const override { return box; }
  [[nodiscard]] IntervalMatrix jacobian(const IntervalVector&) const override {
    return to_interval(Matrix::identity(n_));
  }
  [[nodiscard]] std::string name() const override { return "id"; }

 private:
  std::size_t n_;
};

IntervalMatrix ball(const Matrix& c, const Matrix& r) {
  IntervalMatrix m(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Interval(c(i, j)) + Interval::symmetric(r(i, j));
  return m;
}

}  // namespace

TEST_CASE("diagonal positive matrices") {
  const DefinitenessResult d = rump_positive_definite(to_interval(Matrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}));
  CHECK(d.positive_definite);
  CHECK(d.vertices.size() == 4);
  CHECK(d.margin == doctest::Approx(2.0));
  CHECK_FALSE(rump_positive_definite(to_interval(Matrix{{2, 0}, {0, -1}})).positive_definite);
}

TEST_CASE("identity with a full-ones radius") {
  // vertices [[0.7, -+0.3], [-+0.3, 0.7]] have eigenvalues 0.4 and 1
  Matrix r{{0.3, 0.3}, {0.3, 0.3}};
  const DefinitenessResult d = rump_positive_definite(ball(Matrix::identity(2), r));
  CHECK(d.positive_definite);
  REQUIRE(d.vertices.size() == 2);
  for (const auto& v : d.vertices) {
    CHECK(v.signs.front() == 1);
    CHECK(v.cholesky.success);
  }
  // radius 0.6 J reaches [[0.4, 0.6], [0.6, 0.4]], eigenvalue -0.2
  r = Matrix{{0.6, 0.6}, {0.6, 0.6}};
  CHECK_FALSE(rump_positive_definite(ball(Matrix::identity(2), r)).positive_definite);
}

TEST_CASE("asymmetric input is rejected") {
  CHECK_THROWS_AS(rump_positive_definite(to_interval(Matrix{{2, 1}, {0, 2}})), ShapeError);
  CHECK_THROWS_AS(rump_positive_definite(to_interval(Matrix(2, 3))), ShapeError);
}

TEST_CASE("Cholesky success implies x^T A x > 0 on samples") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1, 1);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Matrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = u(rng);
    Matrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        double s = 0;
        for (std::size_t k = 0; k < 3; ++k) s += b(k, i) * b(k, j);
        a(i, j) = s + (i == j ? 0.05 : 0.0);
      }
    const CholeskyResult c = interval_cholesky(to_interval(a));
    if (!c.success) continue;
    ++certified;
    CHECK(c.pivots.size() == 3);
    CHECK(c.min_pivot > 0.0);
    for (int k = 0; k < 50; ++k) {
      const double x[3] = {u(rng), u(rng), u(rng)};
      double q = 0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) q += x[i] * a(i, j) * x[j];
      CHECK(q > 0.0);
    }
  }
  CHECK(certified > 250);
  const CholeskyResult bad = interval_cholesky(to_interval(Matrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(bad.success);
  CHECK(bad.min_pivot <= 0.0);
}

TEST_CASE("identity map with a doubled target form is not a cone map") {
  const HSet n("N", Vector{0.0, 0.0}, Matrix::identity(2), Vector{1.0, 1.0}, {0});
  const QuadraticForm qn({1.0, -1.0});
  const QuadraticForm qm({2.0, -2.0});
  const ConeCertificate c = check_cone(n, qn, n, qm, IdentityMap(2));
  // V = diag(1, -1)
  CHECK_FALSE(c.passed);
  CHECK(c.matrix(0, 0).contains(1.0));
  CHECK(c.matrix(1, 1).contains(-1.0));
}

TEST_CASE("toy linear link: V is diagonal with the expected entries") {
  const ToyModelParams p;
  const ToyFormScheme f;
  const ToyChain ch = build_toy_chain(p, 3, 3, f);
  const IntervalMatrix v = cone_matrix(ch.sets[0], ch.forms[0], ch.sets[1], ch.forms[1], *ch.link_maps[0]);
  const double r = p.mu / p.lambda;
  CHECK(v(0, 0).contains(f.alpha * (p.lambda * p.lambda - 1)));
  CHECK(v(1, 1).contains(f.gamma * (1 - p.mu * p.mu)));
  CHECK(v(2, 2).contains(f.delta * (1 - r * r)));
  CHECK(v(3, 3).contains(ch.forms[1][3] - ch.forms[0][3]));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(v(i, j).contains(0.0));
  const ConeChainResult all = toy_linear_cones(ch);
  CHECK(all.passed);
  CHECK(all.certificates.size() == ch.k + ch.s);
}

TEST_CASE("toy cone conditions fail when the form ratios reach 1") {
  const ToyModelParams p;
  ToyFormScheme beta_equal;
  beta_equal.beta_ratio = 1.0;
  CHECK_FALSE(toy_linear_cones(build_toy_chain(p, 3, 3, beta_equal)).passed);
  ToyFormScheme d_equal;
  d_equal.d_ratio = 1.0;
  CHECK_FALSE(toy_linear_cones(build_toy_chain(p, 3, 3, d_equal)).passed);
  // D increasing along the links
  ToyFormScheme d_up;
  d_up.d_ratio = 1.1;
  const ConeChainResult r = toy_linear_cones(build_toy_chain(p, 3, 3, d_up));
  CHECK_FALSE(r.passed);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.certificates[i].passed);
}

TEST_CASE("switch blocks") {
  ToyFormScheme f;
  const IntervalMatrix b1 = toy_switch_block_1(f);
  CHECK(b1(0, 0) == Interval(2.0));
  CHECK(b1(0, 1) == Interval(2.0));
  CHECK(b1(1, 1) == Interval(3.0));
  const IntervalMatrix b2 = toy_switch_block_2(f);
  CHECK(b2(0, 0) == Interval(0.25));
  CHECK(b2(1, 1) == Interval(5.0));
  CHECK(rump_positive_definite(b1).positive_definite);
  CHECK(rump_positive_definite(b2).positive_definite);
  f.gamma = 3.0;  // det [[1/4, 1], [1, 4]] = 0
  CHECK_FALSE(rump_positive_definite(toy_switch_block_2(f)).positive_definite);
}

TEST_CASE("Rump check against sampled eigenvalues") {
  const auto r = testing::rump_eigenvalue_sampling(200, 31);
  INFO(r.first_violation);
  CHECK(r.violations == 0);
  CHECK(r.certified > 0);
  CHECK(r.rejected > 0);
}
