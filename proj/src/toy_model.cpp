#include "tangency/toy_model.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace tangency {

void ToyModelParams::validate() const {
  if (!(std::fabs(lambda) > 1.0) || !std::isfinite(lambda)) throw ConfigError("toy model needs |lambda| > 1");
  if (!(std::fabs(mu) < 1.0) || mu == 0.0) throw ConfigError("toy model needs 0 < |mu| < 1");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("toy model needs 0 < Delta < 1");
  if (!(epsilon > 0.0 && epsilon < 0.1)) throw ConfigError("toy model needs 0 < epsilon < 0.1");
}

PlanarMapFamily toy_map_linear(const ToyModelParams& p) {
  const Interval l(p.lambda);
  const Interval m(p.mu);
  PlanarMapFamily f;
  f.name = "f_lin";
  f.forward = [l, m](const Jet2& x, const Jet2& y, const Jet2&) -> std::array<Jet2, 2> { return {l * x, m * y}; };
  f.inverse = [l, m](const Jet2& x, const Jet2& y, const Jet2&) -> std::array<Jet2, 2> { return {x / l, y / m}; };
  return f;
}

PlanarMapFamily toy_map_switch() {
  PlanarMapFamily f;
  f.name = "f_switch";
  f.forward = [](const Jet2& x, const Jet2& y, const Jet2& a) -> std::array<Jet2, 2> {
    const Jet2 dx = x - Interval(1.0);
    return {sqr(dx) + y + a, Interval(1.0) - dx};
  };
  // From (u, w) = (dx^2 + y + a, 1 - dx): dx = 1 - w.
  f.inverse = [](const Jet2& u, const Jet2& w, const Jet2& a) -> std::array<Jet2, 2> {
    const Jet2 dx = Interval(1.0) - w;
    return {Interval(1.0) + dx, u - sqr(dx) - a};
  };
  return f;
}

SlopeMap::SlopeMap(PlanarMapFamily family, SlopeChart source, SlopeChart target, Interval x_domain,
                   Interval y_domain)
    : family_(std::move(family)), source_(source), target_(target), x_domain_(x_domain), y_domain_(y_domain) {}

std::array<Jet2, 4> SlopeMap::evaluate(const IntervalVector& box) const {
  if (box.size() != 4) throw ShapeError("slope map needs a 4-dimensional box");
  if (!box[0].subset_of(x_domain_) || !box[1].subset_of(y_domain_)) {
    std::ostringstream msg;
    msg << family_.name << " evaluated outside its neighborhood: x " << box[0] << ", y " << box[1];
    throw DomainError(msg.str());
  }
  constexpr std::size_t n = 4;
  const Jet2 x = Jet2::variable(0, box[0], n);
  const Jet2 y = Jet2::variable(1, box[1], n);
  const Jet2 s = Jet2::variable(2, box[2], n);
  const Jet2 a = Jet2::variable(3, box[3], n);
  const auto img = family_.forward(x, y, a);
  const Jet2 one = Jet2::constant(Interval(1.0), n);
  const Jet2& ex = source_ == SlopeChart::horizontal ? one : s;
  const Jet2& ey = source_ == SlopeChart::horizontal ? s : one;
  const Jet2 d1 = img[0].partial(0) * ex + img[0].partial(1) * ey;
  const Jet2 d2 = img[1].partial(0) * ex + img[1].partial(1) * ey;
  const Jet2& num = target_ == SlopeChart::horizontal ? d2 : d1;
  const Jet2& den = target_ == SlopeChart::horizontal ? d1 : d2;
  if (den.value().contains_zero()) throw ChartError(family_.name + ": image direction leaves the slope chart");
  return {img[0], img[1], num / den, a};
}

IntervalVector SlopeMap::image(const IntervalVector& box) const {
  const auto r = evaluate(box);
  return IntervalVector{r[0].value(), r[1].value(), r[2].value(), r[3].value()};
}

IntervalMatrix SlopeMap::jacobian(const IntervalVector& box) const {
  const auto r = evaluate(box);
  IntervalMatrix d(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d(i, j) = r[i].grad(j);
  return d;
}

std::string SlopeMap::name() const { return "P" + family_.name; }

namespace {

Matrix identity4() { return Matrix::identity(4); }

}  // namespace

ToyChain build_toy_chain(const ToyModelParams& params, std::size_t k, std::size_t s, const ToyFormScheme& f) {
  params.validate();
  if (k < 1 || s < 1) throw ConfigError("toy chain needs k, s >= 1");
  if (!(f.beta_ratio > 0.0) || !(f.d_ratio > 0.0)) throw ConfigError("form ratios must be positive");
  const double lam = std::fabs(params.lambda);
  const double mu = std::fabs(params.mu);
  const double dl = params.delta;
  const double eps = params.epsilon;

  ToyChain ch;
  ch.params = params;
  ch.k = k;
  ch.s = s;

  // Declared neighborhoods of the two pieces of the map.
  const double reach = 0.6 * dl;
  const Interval lin_x(-(1.0 - reach), 1.0 - reach);
  const Interval lin_y(-2.0, 2.0);
  const Interval sw_x(1.0 - reach, 1.0 + reach);
  const Interval sw_y(-reach, reach);

  // Unstable end: x-centers lambda^(i-k), x_k = Delta/2, x_i = 1.1 x_{i+1} / lambda.
  std::vector<double> c(k + 1), x(k + 1);
  c[k] = 1.0;
  x[k] = dl / 2.0;
  // Signed centers: a negative lambda alternates the side of the fixed point.
  for (std::size_t i = k - 1; i >= 1; --i) {
    c[i] = c[i + 1] / params.lambda;
    x[i] = 1.1 * x[i + 1] / lam;
  }
  c[0] = 0.0;
  x[0] = 1.1 * (std::fabs(c[1]) + x[1]) / lam;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(std::fabs(c[i]) + x[i] < lin_x.hi())) throw ConfigError("toy chain infeasible: N sets leave the linear neighborhood");
  }

  double beta = f.beta;
  std::vector<double> betas(k + 1);
  for (std::size_t i = k + 1; i-- > 0;) {
    betas[i] = beta;
    beta *= f.beta_ratio;
  }
  for (std::size_t i = 0; i <= k; ++i) {
    const double ai = dl * std::pow(1.0 + eps, static_cast<double>(k - i));
    ch.sets.emplace_back("N" + std::to_string(i), Vector{c[i], 0.0, 0.0, 0.0}, identity4(),
                         Vector{x[i], dl / 3.0, (1.0 - eps) * dl / 2.0, ai}, std::vector<std::size_t>{0, 3});
    ch.forms.emplace_back(std::vector<double>{f.alpha, -f.gamma, -f.delta, betas[i]});
  }

  // Stable end: y-centers 1, mu, mu^2, ... and 0 at M_0; y-sizes shrink by
  // 1.1 mu per step toward the fixed point.
  std::vector<double> cb(s + 1), yb(s + 1), ab(s + 1), dd(s + 1);
  cb[s] = 1.0;
  yb[s] = (0.5 + eps) * dl;
  ab[s] = (1.0 + eps) * dl;
  dd[s] = f.D;
  for (std::size_t i = s; i >= 2; --i) {
    cb[i - 1] = params.mu * cb[i];
    yb[i - 1] = 1.1 * mu * yb[i];
  }
  cb[0] = 0.0;
  yb[0] = 1.1 * mu * (std::fabs(cb[1]) + yb[1]);
  for (std::size_t i = s; i >= 1; --i) {
    ab[i - 1] = (1.0 + eps) * ab[i];
    dd[i - 1] = f.d_ratio * dd[i];
  }
  for (std::size_t j = s + 1; j-- > 0;) {
    if (!(std::fabs(cb[j]) + yb[j] < lin_y.hi())) throw ConfigError("toy chain infeasible: M sets leave the linear neighborhood");
    ch.sets.emplace_back("M" + std::to_string(j), Vector{0.0, cb[j], 0.0, 0.0}, identity4(),
                         Vector{dl / 3.0, yb[j], (1.0 - eps) * dl / 2.0, ab[j]}, std::vector<std::size_t>{0, 2});
    ch.forms.emplace_back(std::vector<double>{f.A, -f.C, f.B, -dd[j]});
  }

  const auto lin_u = std::make_shared<SlopeMap>(toy_map_linear(params), SlopeChart::horizontal,
                                                SlopeChart::horizontal, lin_x, lin_y);
  const auto lin_s = std::make_shared<SlopeMap>(toy_map_linear(params), SlopeChart::vertical, SlopeChart::vertical,
                                                lin_x, lin_y);
  const auto sw = std::make_shared<SlopeMap>(toy_map_switch(), SlopeChart::horizontal, SlopeChart::vertical, sw_x,
                                             sw_y);
  for (std::size_t i = 0; i < k; ++i) ch.link_maps.push_back(lin_u);
  ch.switch_link = k;
  ch.link_maps.push_back(sw);
  for (std::size_t j = 0; j < s; ++j) ch.link_maps.push_back(lin_s);

  ch.notes.push_back(
      "stable-end sizes follow the contraction toward the fixed point: mu (c_i + y_i) lies inside c_{i-1} + y_{i-1}, "
      "x and w sizes constant, a sizes growing by 1 + epsilon");
  ch.notes.push_back(
      "index orientation: links run M_i => M_{i-1}; the a-entry of their cone matrix is D_i - D_{i-1}, so D must "
      "decrease strictly along the chain (D_{i-1} < D_i in set labels)");
  return ch;
}

IntervalMatrix toy_switch_block_1(const ToyFormScheme& f) {
  const Interval b(f.B);
  return IntervalMatrix{{Interval(4.0) * b - Interval(f.C) - Interval(f.alpha), Interval(2.0) * b},
                        {Interval(2.0) * b, b + Interval(f.delta)}};
}

IntervalMatrix toy_switch_block_2(const ToyFormScheme& f) {
  const Interval a(f.A);
  return IntervalMatrix{{a - Interval(f.D) - Interval(f.beta), a}, {a, a + Interval(f.gamma)}};
}

Interval transversality_determinant(const Interval& g_a, const Interval& g_tt, const Interval& g_ta) {
  const Interval o(1.0);
  const Interval z(0.0);
  return det4(IntervalMatrix{{o, z, o, z}, {z, o, z, o}, {z, z, g_a, z}, {z, z, g_ta, g_tt}});
}

namespace {

IntervalMatrix symmetric_cone(const IntervalMatrix& d, const QuadraticForm& qn, const QuadraticForm& qm) {
  const IntervalMatrix v = mat_mul(transpose(d), mat_mul(qm.matrix(), d)) - qn.matrix();
  IntervalMatrix s(v.rows(), v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) s(i, j) = (v(i, j) + v(j, i)) * Interval(0.5);
  return s;
}

}  // namespace

ConeChainResult toy_linear_cones(const ToyChain& chain, std::size_t threads) {
  std::vector<ConeLink> cones;
  for (std::size_t i = 0; i + 1 < chain.sets.size(); ++i) {
    if (i == chain.switch_link) continue;
    cones.push_back(
        ConeLink{&chain.sets[i], &chain.forms[i], &chain.sets[i + 1], &chain.forms[i + 1], chain.link_maps[i]});
  }
  return check_cone_chain(cones, threads);
}

ToyReport check_toy(const ToyModelParams& params, std::size_t k, std::size_t s, std::size_t determinant_samples,
                    std::size_t threads, const ToyFormScheme& scheme) {
  const ToyChain ch = build_toy_chain(params, k, s, scheme);
  ToyReport r;
  r.notes = ch.notes;

  std::vector<CoveringLink> links;
  for (std::size_t i = 0; i + 1 < ch.sets.size(); ++i) {
    links.push_back(CoveringLink{&ch.sets[i], &ch.sets[i + 1], ch.link_maps[i], Grid(4, 1), std::nullopt});
  }
  r.chain = check_chain(links, threads);
  r.linear_cones = toy_linear_cones(ch, threads);

  const HSet& nk = ch.sets[ch.switch_link];
  const QuadraticForm& qn = ch.forms[ch.switch_link];
  const QuadraticForm& qm = ch.forms[ch.switch_link + 1];
  const VectorMap& sw = *ch.link_maps[ch.switch_link];
  r.switch_cone_at_center = rump_positive_definite(symmetric_cone(sw.jacobian(to_interval(nk.center())), qn, qm));
  r.switch_block_1 = rump_positive_definite(toy_switch_block_1(scheme));
  r.switch_block_2 = rump_positive_definite(toy_switch_block_2(scheme));

  // Largest x half-width around the switch center keeping the cone matrix
  // certified.
  double lo = 0.0;
  double hi = nk.diameters()[0];
  for (int it = 0; it < 40; ++it) {
    const double m = 0.5 * (lo + hi);
    IntervalVector box = to_interval(nk.center());
    box[0] = box[0] + Interval::symmetric(m);
    for (std::size_t j = 1; j < 4; ++j) box[j] = box[j] + Interval::symmetric(nk.diameters()[j]);
    bool ok = false;
    try {
      ok = rump_positive_definite(symmetric_cone(sw.jacobian(box), qn, qm)).positive_definite;
    } catch (const Error&) {
      ok = false;
    }
    (ok ? lo : hi) = m;
  }
  r.switch_cone_radius = lo;

  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  r.determinant_samples = determinant_samples;
  for (std::size_t i = 0; i < determinant_samples; ++i) {
    const Interval ga(dist(rng)), gtt(dist(rng)), gta(dist(rng));
    if (!(transversality_determinant(ga, gtt, gta) - ga * gtt).contains_zero()) ++r.determinant_failures;
  }

  r.passed = r.chain.passed && r.linear_cones.passed && r.switch_cone_at_center.positive_definite &&
             r.switch_block_1.positive_definite && r.switch_block_2.positive_definite && r.determinant_failures == 0;
  std::ostringstream note;
  note << "switch cone certified at x = 0 and on |x - 1| <= " << r.switch_cone_radius;
  r.notes.push_back(note.str());
  return r;
}

}  // namespace tangency
