#include "tangency/projective.hpp"

#include <sstream>

namespace tangency {

namespace {

void require_in_chart(const Interval& t) {
  if (!(t.lo() > 0.0 && t.hi() < pi().lo())) {
    std::ostringstream msg;
    msg << "angle enclosure " << t << " leaves the chart (0, pi)";
    throw ChartError(msg.str());
  }
}

}  // namespace

ChartPoint ChartPoint::from_vector(const IntervalVector& v) {
  if (v.size() != 4) throw ShapeError("chart point needs 4 coordinates");
  return ChartPoint{v[0], v[1], v[2], v[3]};
}

void ChartPoint::validate() const { require_in_chart(t); }

PlanarMapFamily PlanarMapFamily::inverted() const {
  return PlanarMapFamily{name + "^-1", inverse, forward};
}

std::array<Interval, 2> PlanarMapFamily::eval(const Interval& x, const Interval& y, const Interval& a) const {
  const auto r = forward(Jet2::constant(x, 0), Jet2::constant(y, 0), Jet2::constant(a, 0));
  return {r[0].value(), r[1].value()};
}

std::array<Interval, 2> PlanarMapFamily::eval_inverse(const Interval& x, const Interval& y,
                                                      const Interval& a) const {
  const auto r = inverse(Jet2::constant(x, 0), Jet2::constant(y, 0), Jet2::constant(a, 0));
  return {r[0].value(), r[1].value()};
}

bool inverse_consistent(const PlanarMapFamily& f, const Interval& x, const Interval& y, const Interval& a) {
  const auto img = f.eval(x, y, a);
  const auto back = f.eval_inverse(img[0], img[1], a);
  return x.subset_of(back[0]) && y.subset_of(back[1]);
}

Interval direction_to_angle(const IntervalVector& v) {
  if (v.size() != 2) throw ShapeError("direction must be a planar vector");
  if (v[0].contains_zero() && v[1].contains_zero()) {
    throw DomainError("direction enclosure contains the zero vector");
  }
  if (v[1].contains_zero()) {
    throw ChartError("direction class may be horizontal, which the chart excludes");
  }
  // For v2 != 0 the class of (v1, v2) is that of (v1/v2, 1), whose angle in
  // (0, pi) is pi/2 - atan(v1/v2) regardless of the sign of v2.
  const Interval t = half_pi() - atan(v[0] / v[1]);
  require_in_chart(t);
  return t;
}

Jet2 direction_to_angle(const Jet2& v1, const Jet2& v2) {
  if (v1.value().contains_zero() && v2.value().contains_zero()) {
    throw DomainError("direction enclosure contains the zero vector");
  }
  if (v2.value().contains_zero()) {
    throw ChartError("direction class may be horizontal, which the chart excludes");
  }
  const Jet2 t = half_pi() - atan(v1 / v2);
  require_in_chart(t.value());
  return t;
}

IntervalVector angle_to_direction(const Interval& t) { return IntervalVector{cos(t), sin(t)}; }

ChartPoint apply_pf(const PlanarMapFamily& f, const ChartPoint& p) {
  p.validate();
  const Jet2 x = Jet2::first_order(p.x, IntervalVector{Interval(1.0), Interval(0.0)});
  const Jet2 y = Jet2::first_order(p.y, IntervalVector{Interval(0.0), Interval(1.0)});
  const Jet2 a = Jet2::first_order(p.a, IntervalVector(2));
  const auto img = f.forward(x, y, a);
  const Interval c = cos(p.t);
  const Interval s = sin(p.t);
  const IntervalVector v{img[0].grad(0) * c + img[0].grad(1) * s, img[1].grad(0) * c + img[1].grad(1) * s};
  return ChartPoint{img[0].value(), img[1].value(), direction_to_angle(v), p.a};
}

IntervalMatrix derivative_pf(const PlanarMapFamily& f, const ChartPoint& box) {
  box.validate();
  constexpr std::size_t n = 4;
  const Jet2 x = Jet2::variable(0, box.x, n);
  const Jet2 y = Jet2::variable(1, box.y, n);
  const Jet2 t = Jet2::variable(2, box.t, n);
  const Jet2 a = Jet2::variable(3, box.a, n);
  const auto img = f.forward(x, y, a);
  const Jet2 c = cos(t);
  const Jet2 s = sin(t);
  // Components of Df(x, y) (cos t, sin t) as jets; their gradients need the
  // Hessians of f.
  const Jet2 v1 = img[0].partial(0) * c + img[0].partial(1) * s;
  const Jet2 v2 = img[1].partial(0) * c + img[1].partial(1) * s;
  const Jet2 angle = direction_to_angle(v1, v2);

  IntervalMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    d(0, j) = img[0].grad(j);
    d(1, j) = img[1].grad(j);
    d(2, j) = angle.grad(j);
  }
  d(3, 3) = Interval(1.0);
  return d;
}

IntervalVector ProjectiveMap::image(const IntervalVector& box) const {
  return apply_pf(family_, ChartPoint::from_vector(box)).as_vector();
}

IntervalMatrix ProjectiveMap::jacobian(const IntervalVector& box) const {
  return derivative_pf(family_, ChartPoint::from_vector(box));
}

FixedParameterMap::FixedParameterMap(std::shared_ptr<const VectorMap> full, const Interval& parameter)
    : full_(std::move(full)), parameter_(parameter) {
  if (!full_ || full_->dimension() < 2) throw ShapeError("parameter slice needs a map of dimension >= 2");
}

IntervalVector FixedParameterMap::extend(const IntervalVector& box) const {
  if (box.size() != dimension()) throw ShapeError("box dimension does not match parameter slice");
  std::vector<Interval> v(box.begin(), box.end());
  v.push_back(parameter_);
  return IntervalVector(std::move(v));
}

IntervalVector FixedParameterMap::image(const IntervalVector& box) const {
  const IntervalVector full = full_->image(extend(box));
  return IntervalVector(std::vector<Interval>(full.begin(), full.end() - 1));
}

IntervalMatrix FixedParameterMap::jacobian(const IntervalVector& box) const {
  const IntervalMatrix full = full_->jacobian(extend(box));
  const std::size_t n = dimension();
  IntervalMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = full(i, j);
  return d;
}

std::string FixedParameterMap::name() const {
  std::ostringstream s;
  s << full_->name() << " with parameter in " << parameter_;
  return s.str();
}

}  // namespace tangency
