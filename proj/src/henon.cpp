#include "tangency/henon.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tangency/config.hpp"

namespace tangency {

double Term::evaluate(double lambda, double mu) const {
  double v = scale;
  for (const auto& [base, power] : powers) {
    double b = 0.0;
    if (base == "lambda") {
      b = lambda;
    } else if (base == "mu") {
      b = mu;
    } else {
      try {
        std::size_t used = 0;
        b = std::stod(base, &used);
        if (used != base.size()) throw ConfigError("");
      } catch (const std::exception&) {
        throw ConfigError("unknown base '" + base + "' in coefficient term");
      }
    }
    v *= std::pow(b, power);
  }
  return v;
}

PlanarMapFamily henon_family(const Interval& b) {
  if (b.contains_zero()) throw ConfigError("Henon parameter b must be nonzero");
  PlanarMapFamily f;
  f.name = "H";
  f.forward = [b](const Jet2& x, const Jet2& y, const Jet2& a) -> std::array<Jet2, 2> {
    return {a - sqr(x) + b * y, x};
  };
  f.inverse = [b](const Jet2& x, const Jet2& y, const Jet2& a) -> std::array<Jet2, 2> {
    return {y, (x - a + sqr(y)) / b};
  };
  return f;
}

IntervalVector henon_fixed_point(const Interval& a, const Interval& b) {
  const Interval x = Interval(0.5) * (b - sqrt(sqr(b - Interval(1.0)) + Interval(4.0) * a) - Interval(1.0));
  return IntervalVector{x, x};
}

namespace {

Vector normalized(double x, double y) {
  const double n = std::hypot(x, y);
  return Vector{x / n, y / n};
}

Vector direction_of(const Interval& t) { return normalized(cos(t).mid(), sin(t).mid()); }

IntervalVector unit(const IntervalVector& v) {
  const Interval n = sqrt(sqr(v[0]) + sqr(v[1]));
  return IntervalVector{v[0] / n, v[1] / n};
}

Matrix frame(const Vector& u, const Vector& s) {
  return Matrix{{u[0], s[0], 0.0, 0.0}, {u[1], s[1], 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
}

Matrix minor3(const Matrix& m) {
  Matrix r(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = m(i, j);
  return r;
}

double max_width(const IntervalVector& v) {
  double w = 0.0;
  for (const auto& x : v) w = std::max(w, x.width());
  return w;
}

// Approximate orbit of (z1, u0) in 50 significant digits, returned as
// (x, y, t) for steps 1..14. Binary64 loses the tangent direction near the
// fold before step 14.
std::vector<std::array<double, 3>> precise_orbit(const HenonProofData& data) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  const Real a(data.a0), b(data.b0), cu(data.seed_u), cs(data.seed_s);
  const Real x0 = (b - sqrt((b - 1) * (b - 1) + 4 * a) - 1) / 2;
  const Real root = sqrt(x0 * x0 + b);
  auto unit = [](Real x, Real y) {
    const Real n = sqrt(x * x + y * y);
    return std::array<Real, 2>{x / n, y / n};
  };
  const auto u0 = unit(-x0 + root, Real(1));
  auto s0 = unit(-x0 - root, Real(1));
  s0 = {-s0[0], -s0[1]};
  const Real half_pi = boost::math::constants::half_pi<Real>();
  std::array<Real, 2> z{x0 + cu * u0[0] + cs * s0[0], x0 + cu * u0[1] + cs * s0[1]};
  std::array<Real, 2> v = u0;
  std::vector<std::array<double, 3>> out;
  for (int i = 1; i <= 14; ++i) {
    if (i > 1) {
      const std::array<Real, 2> dv{-2 * z[0] * v[0] + b * v[1], v[0]};
      z = {a - z[0] * z[0] + b * z[1], z[0]};
      v = unit(dv[0], dv[1]);
    }
    const Real t = half_pi - atan(v[0] / v[1]);
    out.push_back({static_cast<double>(z[0]), static_cast<double>(z[1]), static_cast<double>(t)});
  }
  return out;
}

}  // namespace

HenonChain build_chain(const HenonProofData& data, double param_radius) {
  if (data.sets.size() != 16) throw ConfigError("the Henon chain needs exactly 16 set descriptions");
  if (!(param_radius > 0.0) || !std::isfinite(param_radius)) throw ConfigError("parameter radius must be positive");

  HenonChain ch;
  ch.a0 = Interval::from_decimal(data.a0);
  ch.b = Interval::from_decimal(data.b0);
  const double lambda = Interval::from_decimal(data.lambda).mid();
  const double mu = Interval::from_decimal(data.mu).mid();
  const PlanarMapFamily fam = henon_family(ch.b);

  ch.z0 = henon_fixed_point(ch.a0, ch.b);
  const Interval x0 = ch.z0[0];
  const Interval root = sqrt(sqr(x0) + ch.b);
  // DH(z0) has eigenvalues -x0 +- sqrt(x0^2 + b) with eigenvectors (ev, 1).
  // The seed coefficients refer to s0 pointing into the lower half plane,
  // s0 ~ -(0.0775, 0.997); the orbit direction at N14 depends on that sign.
  ch.u0 = unit(IntervalVector{-x0 + root, Interval(1.0)});
  ch.s0 = Interval(-1.0) * unit(IntervalVector{-x0 - root, Interval(1.0)});
  ch.z1 = ch.z0 + Interval::from_decimal(data.seed_u) * ch.u0 + Interval::from_decimal(data.seed_s) * ch.s0;

  const Interval tu = direction_to_angle(ch.u0);
  const Interval ts = direction_to_angle(ch.s0);

  std::vector<Vector> c(16);
  c[0] = mid(IntervalVector{ch.z0[0], ch.z0[1], tu, ch.a0});
  c[15] = mid(IntervalVector{ch.z0[0], ch.z0[1], ts, ch.a0});
  // Centers come from a 50-digit pseudo-orbit rounded to binary64. The
  // recorded enclosures are one-step images of the previous center and only
  // serve as a consistency check on that rounding.
  const auto precise = precise_orbit(data);
  for (std::size_t i = 1; i <= 14; ++i) {
    const auto& q = precise[i - 1];
    c[i] = Vector{q[0], q[1], q[2], c[0][3]};
  }
  ch.orbit.push_back(ChartPoint{ch.z1[0], ch.z1[1], tu, ch.a0}.as_vector());
  for (std::size_t i = 2; i <= 14; ++i) {
    const IntervalVector v = apply_pf(fam, ChartPoint::from_vector(to_interval(c[i - 1]))).as_vector();
    if (max_width(v) > data.orbit_width_limit) {
      std::ostringstream msg;
      msg << "orbit enclosure of center " << i << " is too wide: " << v;
      throw DomainError(msg.str());
    }
    ch.orbit.push_back(v);
  }

  auto chart_at = [&](std::size_t i, const Vector& dir) {
    return ChartPoint{Interval(c[i][0]), Interval(c[i][1]), direction_to_angle(to_interval(dir)), ch.a0};
  };
  const PlanarMapFamily inv = fam.inverted();

  std::vector<Vector> u(16), s(16);
  u[0] = u[1] = u[15] = mid(ch.u0);
  s[0] = s[1] = s[15] = mid(ch.s0);
  for (std::size_t i = 2; i <= 8; ++i) {
    u[i] = direction_of(Interval(c[i][2]));
    const Vector tn = direction_of(Interval(c[i + 1][2]));
    s[i] = direction_of(apply_pf(inv, chart_at(i + 1, Vector{-tn[1], tn[0]})).t);
  }
  for (std::size_t i = 9; i <= 14; ++i) s[i] = direction_of(Interval(c[i][2]));
  u[9] = direction_of(apply_pf(fam, chart_at(8, s[8])).t);
  for (std::size_t i = 9; i <= 13; ++i) u[i + 1] = direction_of(apply_pf(fam, chart_at(i, u[i])).t);

  for (std::size_t i = 0; i < 16; ++i) {
    const HenonSetSpec& spec = data.sets[i];
    Vector d(4);
    for (std::size_t k = 0; k < 3; ++k) d[k] = spec.diameters[k].evaluate(lambda, mu) * data.diameter_unit;
    d[3] = spec.parameter_diameter.evaluate(lambda, mu) * param_radius;
    std::vector<double> q(4);
    for (std::size_t k = 0; k < 4; ++k) q[k] = spec.form[k].evaluate(lambda, mu);
    ch.sets.emplace_back("N" + std::to_string(i), c[i], frame(u[i], s[i]), d, spec.unstable_axes);
    ch.forms.emplace_back(q);
    ch.sets.back().require_compatible(ch.forms.back());
  }

  const std::vector<std::size_t> chart_axes{0, 1, 2};
  const HSet& n15 = ch.sets[15];
  const HSet& n0 = ch.sets[0];
  ch.stable_form = ch.forms[15].restricted(chart_axes);
  ch.stable_end = HSet("N15~", Vector{c[15][0], c[15][1], c[15][2]}, minor3(n15.coord_matrix()),
                       Vector{n15.diameters()[0], n15.diameters()[1], n15.diameters()[2]},
                       ch.stable_form.positive_axes());
  ch.stable_parameter_coefficient = ch.forms[15][3];
  ch.stable_parameters = Interval(c[15][3]) + Interval::symmetric(n15.diameters()[3]);

  // Along the inverse map the roles of the axes are exchanged.
  ch.unstable_form = ch.forms[0].restricted(chart_axes).negated();
  ch.unstable_end = HSet("N0~", Vector{c[0][0], c[0][1], c[0][2]}, minor3(n0.coord_matrix()),
                         Vector{n0.diameters()[0], n0.diameters()[1], n0.diameters()[2]},
                         ch.unstable_form.positive_axes());
  ch.unstable_parameter_coefficient = ch.forms[0][3];
  ch.unstable_parameters = Interval(c[0][3]) + Interval::symmetric(n0.diameters()[3]);
  return ch;
}

SeedQuality seed_quality(const HenonChain& chain, const HenonProofData& data) {
  const PlanarMapFamily fam = henon_family(chain.b);
  SeedQuality q;
  const auto back = fam.eval_inverse(chain.z1[0], chain.z1[1], chain.a0);
  q.backward = IntervalVector{back[0], back[1]} - chain.z0;
  std::array<Interval, 2> z{chain.z1[0], chain.z1[1]};
  for (int i = 0; i < 14; ++i) z = fam.eval(z[0], z[1], chain.a0);
  q.forward = IntervalVector{z[0], z[1]} - chain.z0;
  q.backward_distance = norm_bound(q.backward);
  q.forward_distance = norm_bound(q.forward);
  q.passed = q.backward_distance <= data.seed_backward_bound && q.forward_distance <= data.seed_forward_bound;
  return q;
}

namespace {

// "1e−5" style, with a typographic minus.
std::string format_radius(double r) {
  const int e = static_cast<int>(std::floor(std::log10(r)));
  const double m = r / std::pow(10.0, e);
  char buf[64];
  if (std::fabs(m - std::round(m)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.0f", std::round(m));
  } else {
    std::snprintf(buf, sizeof buf, "%.6g", m);
  }
  std::string out = buf;
  if (e == 0) return out;
  out += "e";
  if (e < 0) out += "−";
  out += std::to_string(std::abs(e));
  return out;
}

std::string format_decimal(const std::string& s) {
  if (!s.empty() && s.front() == '-') return "−" + s.substr(1);
  return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

TangencyCertificate run_proof(const HenonProofData& data, const ProofOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TangencyCertificate cert;
  cert.param_radius = options.param_radius.value_or(data.param_radius);
  cert.a0 = data.a0;
  cert.b0 = data.b0;
  cert.conclusion =
      "covering chain N0 => N1 => ... => N15 under PH with cone conditions on every link; the unstable manifold "
      "of (z0, [u0]) is a horizontal disk in N0 and the stable manifold of (z0, [s0]) a vertical disk in N15, so "
      "the projectivized manifolds intersect transversally in the chain, which is equivalent to a quadratic "
      "tangency of the planar manifolds unfolding generically in a";

  HenonChain ch;
  try {
    ch = build_chain(data, cert.param_radius);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    cert.failures.push_back(std::string("chain construction: ") + err.what());
    cert.summary = "tangency not verified: " + cert.failures.front();
    cert.timings_ms["total"] = elapsed_ms(start);
    return cert;
  }
  cert.timings_ms["build"] = elapsed_ms(start);
  const HSet& n8 = ch.sets[8];
  cert.parameter_interval = Interval(n8.center()[3]) + Interval::symmetric(n8.diameters()[3]);
  cert.seed = seed_quality(ch, data);

  const PlanarMapFamily fam = henon_family(ch.b);
  const auto forward = std::make_shared<ProjectiveMap>(fam);
  const auto backward = std::make_shared<ProjectiveMap>(fam.inverted());

  // Disks run alongside the chain.
  DiskOptions disk = options.disk;
  auto stable = std::async(std::launch::async, [&] {
    return verify_disk(DiskSide::stable, ch.stable_end, ch.stable_form, ch.stable_parameter_coefficient, forward,
                       ch.stable_parameters, disk);
  });
  auto unstable = std::async(std::launch::async, [&] {
    return verify_disk(DiskSide::unstable, ch.unstable_end, ch.unstable_form, ch.unstable_parameter_coefficient,
                       backward, ch.unstable_parameters, disk);
  });

  auto t0 = std::chrono::steady_clock::now();
  std::vector<CoveringLink> links;
  std::vector<ConeLink> cone_links;
  for (std::size_t i = 0; i + 1 < ch.sets.size(); ++i) {
    CoveringLink l;
    l.source = &ch.sets[i];
    l.target = &ch.sets[i + 1];
    l.map = forward;
    if (auto g = options.link_grids.find(i); g != options.link_grids.end()) {
      l.grid = g->second;
    } else {
      l.grid = options.grid.empty() ? Grid(4, 1) : options.grid;
    }
    if (auto c = options.correspondences.find(i); c != options.correspondences.end()) l.correspondence = c->second;
    links.push_back(std::move(l));
    cone_links.push_back(ConeLink{&ch.sets[i], &ch.forms[i], &ch.sets[i + 1], &ch.forms[i + 1], forward});
  }
  cert.chain = check_chain(links, options.threads);
  cert.timings_ms["covering"] = elapsed_ms(t0);
  t0 = std::chrono::steady_clock::now();
  cert.cones = check_cone_chain(cone_links, options.threads);
  cert.timings_ms["cones"] = elapsed_ms(t0);
  t0 = std::chrono::steady_clock::now();
  cert.stable_disk = stable.get();
  cert.unstable_disk = unstable.get();
  cert.timings_ms["disks_wait"] = elapsed_ms(t0);

  for (const auto& c : cert.chain.certificates) {
    if (!c.passed) cert.failures.push_back("covering " + c.source + " => " + c.target + ": " + c.failure);
  }
  for (const auto& c : cert.cones.certificates) {
    if (!c.passed) cert.failures.push_back("cone " + c.source + " => " + c.target + ": " + c.failure);
  }
  for (const auto* d : {&cert.unstable_disk, &cert.stable_disk}) {
    if (!d->passed) cert.failures.push_back(to_string(d->side) + " disk: " + d->failure);
  }
  cert.passed = cert.failures.empty();
  if (cert.passed) {
    cert.summary = "quadratic homoclinic tangency unfolding generically verified for a ∈ " + data.a0 + " ± " +
                   format_radius(cert.param_radius) + ", b = " + format_decimal(data.b0);
  } else {
    cert.summary = "tangency not verified: " + cert.failures.front();
  }
  cert.timings_ms["total"] = elapsed_ms(start);
  return cert;
}

HenonProofData HenonProofData::defaults() { return henon_data_from_json(nlohmann::json::parse(default_henon_config())); }

}  // namespace tangency
