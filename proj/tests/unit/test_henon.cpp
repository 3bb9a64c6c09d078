#include <doctest.h>

#include <cmath>

#include "properties.hpp"
#include "tangency/errors.hpp"
#include "tangency/henon.hpp"

using namespace tangency;
using tangency::testing::encloses;
using tangency::testing::Real;

namespace {

const HenonProofData& data() {
  static const HenonProofData d = HenonProofData::defaults();
  return d;
}

const HenonChain& chain() {
  static const HenonChain ch = build_chain(data(), 1e-5);
  return ch;
}

}  // namespace

TEST_CASE("fixed point encloses the 50-digit value and is fixed") {
  const Real a("1.3145271093265"), b("-0.3");
  const Real x0 = (b - sqrt((b - 1) * (b - 1) + 4 * a) - 1) / 2;
  const IntervalVector z0 = chain().z0;
  CHECK(encloses(z0[0], x0));
  CHECK(encloses(z0[1], x0));
  CHECK(z0[0].width() < 1e-14);
  const auto img = henon_family(chain().b).eval(z0[0], z0[1], chain().a0);
  CHECK(img[0].contains(z0[0].mid()));
  CHECK(img[1].contains(z0[1].mid()));
}

TEST_CASE("eigenvectors satisfy DH v = lambda v") {
  const Interval x0 = chain().z0[0];
  const Interval b = chain().b;
  for (const auto* v : {&chain().u0, &chain().s0}) {
    const Interval e0 = Interval(-2.0) * x0 * (*v)[0] + b * (*v)[1];
    const Interval e1 = (*v)[0];
    // collinearity: e0 v1 - e1 v0 = 0
    CHECK(std::fabs((e0 * (*v)[1] - e1 * (*v)[0]).mid()) < 1e-13);
    CHECK(std::fabs(norm_bound(*v) - 1.0) < 1e-12);
  }
  // |lambda| from u0: ratio of the second components
  const double lam = std::fabs(chain().u0[0].mid() / chain().u0[1].mid());
  CHECK(lam == doctest::Approx(std::stod(data().lambda)).epsilon(1e-8));
}

TEST_CASE("seed quality bounds") {
  const SeedQuality q = seed_quality(chain(), data());
  CHECK(q.backward_distance <= 5.2e-5);
  CHECK(q.forward_distance <= 1.2e-5);
  CHECK(q.passed);
}

TEST_CASE("orbit enclosures are thin and their midpoints lie in the next set") {
  REQUIRE(chain().orbit.size() == 14);
  REQUIRE(chain().sets.size() == 16);
  for (std::size_t i = 0; i < chain().orbit.size(); ++i) {
    const IntervalVector& o = chain().orbit[i];
    for (const auto& x : o) CHECK(x.width() <= data().orbit_width_limit);
    INFO("orbit point " << i);
    CHECK(chain().sets[i + 1].certainly_contains(to_interval(mid(o))));
  }
}

TEST_CASE("set frames have unit columns and the expected axis split") {
  for (std::size_t i = 0; i < 16; ++i) {
    const HSet& n = chain().sets[i];
    CHECK(n.name() == "N" + std::to_string(i));
    for (std::size_t j = 0; j < 4; ++j) CHECK(n.diameters()[j] > 0.0);
    CHECK(n.unstable_axes().size() == 2);
    CHECK(n.coord_matrix()(3, 3) == 1.0);
  }
  // every set shares the same parameter center
  for (std::size_t i = 1; i < 16; ++i) CHECK(chain().sets[i].center()[3] == chain().sets[0].center()[3]);
}

TEST_CASE("construction is deterministic") {
  const HenonChain again = build_chain(data(), 1e-5);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(again.sets[i].center() == chain().sets[i].center());
    CHECK(again.sets[i].diameters() == chain().sets[i].diameters());
    CHECK(again.forms[i].coeffs() == chain().forms[i].coeffs());
  }
}

TEST_CASE("full proof passes with grid 1 and with grid 2") {
  ProofOptions o;
  const TangencyCertificate c = run_proof(data(), o);
  INFO(c.summary);
  CHECK(c.passed);
  CHECK(c.chain.certificates.size() == 15);
  CHECK(c.cones.certificates.size() == 15);
  CHECK(c.parameter_interval.contains(1.3145271093265));
  CHECK(c.parameter_interval.width() == doctest::Approx(2e-5).epsilon(1e-6));
  CHECK(c.summary.find("1.3145271093265") != std::string::npos);
  o.grid = Grid(4, 2);
  o.threads = 2;
  CHECK(run_proof(data(), o).passed);
}

TEST_CASE("a wide parameter radius is not verified") {
  ProofOptions o;
  o.param_radius = 1e-3;
  const TangencyCertificate c = run_proof(data(), o);
  CHECK_FALSE(c.passed);
  CHECK_FALSE(c.failures.empty());
  CHECK(c.summary.rfind("tangency not verified", 0) == 0);
}

TEST_CASE("Term evaluation") {
  Term t;
  t.scale = 2.0;
  t.powers = {{"lambda", 2}, {"mu", -1}, {"1.5", -6}};
  CHECK(t.evaluate(3.0, 0.5) == doctest::Approx(2.0 * 9.0 / 0.5 * std::pow(1.5, -6)));
}

TEST_CASE("degenerate b is rejected") { CHECK_THROWS_AS(henon_family(Interval(0.0)), ConfigError); }
