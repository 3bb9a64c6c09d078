#ifndef TANGENCY_PROJECTIVE_HPP
#define TANGENCY_PROJECTIVE_HPP

#include <array>
#include <functional>
#include <string>

#include "tangency/interval.hpp"
#include "tangency/jet.hpp"
#include "tangency/linalg.hpp"
#include "tangency/vector_map.hpp"

namespace tangency {

// A point (or box) of the projective bundle of the plane in the angle chart
// (x, y, t) -> (x, y, [(cos t, sin t)]), extended by the parameter a.
// t must stay strictly inside (0, pi).
struct ChartPoint {
  Interval x;
  Interval y;
  Interval t;
  Interval a;

  [[nodiscard]] IntervalVector as_vector() const { return IntervalVector{x, y, t, a}; }
  static ChartPoint from_vector(const IntervalVector& v);
  // Throws ChartError when t touches 0 or pi.
  void validate() const;
};

// (x, y, a) -> f_a(x, y) on jets.
using PlanarJetMap = std::function<std::array<Jet2, 2>(const Jet2& x, const Jet2& y, const Jet2& a)>;

// One-parameter family of planar diffeomorphisms with its inverse.
struct PlanarMapFamily {
  std::string name;
  PlanarJetMap forward;
  PlanarJetMap inverse;

  // The same family with forward and inverse exchanged.
  [[nodiscard]] PlanarMapFamily inverted() const;
  // Interval image of f_a(x, y).
  [[nodiscard]] std::array<Interval, 2> eval(const Interval& x, const Interval& y, const Interval& a) const;
  [[nodiscard]] std::array<Interval, 2> eval_inverse(const Interval& x, const Interval& y,
                                                     const Interval& a) const;
};

// True when inverse(forward(box)) encloses box, i.e. the two evaluators are
// consistent on it.
bool inverse_consistent(const PlanarMapFamily& f, const Interval& x, const Interval& y, const Interval& a);

// Angle t in (0, pi) of the projective class [v]. The class of v and -v is the
// same; the representative with positive second component is used. Throws
// ChartError if v may vanish or if its class may touch the excluded
// horizontal direction.
Interval direction_to_angle(const IntervalVector& v);
Jet2 direction_to_angle(const Jet2& v1, const Jet2& v2);

// (cos t, sin t).
IntervalVector angle_to_direction(const Interval& t);

// Pf(x, y, t, a) = (f_a(x, y), angle(Df_a(x, y) (cos t, sin t)), a).
ChartPoint apply_pf(const PlanarMapFamily& f, const ChartPoint& p);

// Enclosure of D(Pf) over the box in chart coordinates (x, y, t, a).
IntervalMatrix derivative_pf(const PlanarMapFamily& f, const ChartPoint& box);

// Pf as a map on R^4 = (x, y, t, a).
class ProjectiveMap final : public VectorMap {
 public:
  explicit ProjectiveMap(PlanarMapFamily family) : family_(std::move(family)) {}

  [[nodiscard]] std::size_t dimension() const override { return 4; }
  [[nodiscard]] IntervalVector image(const IntervalVector& box) const override;
  [[nodiscard]] IntervalMatrix jacobian(const IntervalVector& box) const override;
  [[nodiscard]] std::string name() const override { return "P" + family_.name; }

  [[nodiscard]] const PlanarMapFamily& family() const noexcept { return family_; }

 private:
  PlanarMapFamily family_;
};

}  // namespace tangency

#endif  // TANGENCY_PROJECTIVE_HPP
