#include "tangency/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "tangency/parallel.hpp"

namespace tangency {

double CoveringCertificate::min_exit_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& w : walls) m = std::min(m, w.margin);
  return m;
}

double CoveringCertificate::min_entry_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : entry) m = std::min(m, e.margin);
  return m;
}

IntervalVector normalized_image(const HSet& src, const HSet& tgt, const VectorMap& map, const IntervalVector& box) {
  const std::size_t n = src.dimension();
  if (tgt.dimension() != n || map.dimension() != n || box.size() != n) {
    throw ShapeError("covering: source, target and map dimensions differ");
  }
  const IntervalVector direct = tgt.to_normalized(map.image(src.from_normalized(box)));

  // Mean-value form: F(m) + T DF(N) M_src diag(d_src) (box - m), where
  // T maps ambient vectors to normalized target coordinates.
  IntervalVector m(n);
  IntervalVector offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = Interval(box[i].mid());
    offset[i] = box[i] - m[i];
  }
  const IntervalVector fm = tgt.to_normalized(map.image(src.from_normalized(m)));
  IntervalMatrix t = mat_mul(tgt.inv_coord(), mat_mul(map.jacobian(src.from_normalized(box)), to_interval(src.coord_matrix())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = t(i, j) * Interval(src.diameters()[j]) / Interval(tgt.diameters()[i]);
    }
  }
  const IntervalVector mean_value = fm + mat_vec(t, offset);
  return intersect(direct, mean_value);
}

AxisCorrespondence detect_correspondence(const HSet& src, const HSet& tgt, const VectorMap& map) {
  const auto& su = src.unstable_axes();
  const auto& tu = tgt.unstable_axes();
  if (su.size() != tu.size()) throw ShapeError("covering: unstable dimensions of source and target differ");
  const std::size_t k = su.size();
  const std::size_t n = src.dimension();

  // stretch[i][j]: displacement of target axis tu[j] between the midpoints of
  // the two walls of source axis su[i].
  std::vector<std::vector<double>> stretch(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    IntervalVector lo(n), hi(n);
    lo[su[i]] = Interval(-1.0);
    hi[su[i]] = Interval(1.0);
    const IntervalVector a = tgt.to_normalized(map.image(src.from_normalized(lo)));
    const IntervalVector b = tgt.to_normalized(map.image(src.from_normalized(hi)));
    for (std::size_t j = 0; j < k; ++j) stretch[i][j] = b[tu[j]].mid() - a[tu[j]].mid();
  }

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  double best_score = -std::numeric_limits<double>::infinity();
  do {
    double score = 0.0;
    for (std::size_t i = 0; i < k; ++i) score += std::log(std::fabs(stretch[i][perm[i]]));
    if (score > best_score) {
      best_score = score;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  AxisCorrespondence out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(AxisPair{su[i], tu[best[i]], stretch[i][best[i]] < 0.0 ? -1 : 1});
  }
  return out;
}

namespace {

void validate_correspondence(const HSet& src, const HSet& tgt, const AxisCorrespondence& c) {
  if (c.size() != src.unstable_axes().size()) throw ConfigError("correspondence must pair every unstable axis");
  std::vector<std::size_t> s, t;
  for (const auto& p : c) {
    if (!src.is_unstable(p.source_axis) || !tgt.is_unstable(p.target_axis) || (p.sign != 1 && p.sign != -1)) {
      throw ConfigError("correspondence pairs non-unstable axes or has an invalid sign");
    }
    s.push_back(p.source_axis);
    t.push_back(p.target_axis);
  }
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end() || std::adjacent_find(t.begin(), t.end()) != t.end()) {
    throw ConfigError("correspondence is not a bijection");
  }
}

}  // namespace

CoveringCertificate check_covering(const HSet& src, const HSet& tgt, const VectorMap& map, const Grid& grid,
                                   const std::optional<AxisCorrespondence>& correspondence, std::size_t threads) {
  if (src.unstable_axes().size() != tgt.unstable_axes().size()) {
    throw ShapeError("covering: unstable dimensions of '" + src.name() + "' and '" + tgt.name() + "' differ");
  }
  if (src.dimension() != tgt.dimension() || map.dimension() != src.dimension()) {
    throw ShapeError("covering: source, target and map dimensions differ");
  }
  CoveringCertificate cert;
  cert.source = src.name();
  cert.target = tgt.name();
  cert.map = map.name();
  cert.grid = grid;

  try {
    cert.correspondence = correspondence ? *correspondence : detect_correspondence(src, tgt, map);
    validate_correspondence(src, tgt, cert.correspondence);

    // Exit conditions.
    for (const auto& pair : cert.correspondence) {
      for (int side : {-1, 1}) {
        const auto boxes = src.walls(pair.source_axis, side, grid);
        std::vector<Interval> images(boxes.size());
        parallel_for(boxes.size(), threads, [&](std::size_t b) {
          images[b] = Interval(pair.sign) * normalized_image(src, tgt, map, boxes[b])[pair.target_axis];
        });
        WallMargin w;
        w.source_axis = pair.source_axis;
        w.side = side;
        w.target_axis = pair.target_axis;
        w.image = images.front();
        for (const auto& im : images) w.image = Interval::hull(w.image, im);
        w.margin = side < 0 ? rounding::sub_down(-1.0, w.image.hi()) : rounding::sub_down(w.image.lo(), 1.0);
        cert.walls.push_back(w);
      }
    }

    // Entry conditions.
    const auto boxes = src.pieces(grid);
    std::vector<IntervalVector> images(boxes.size());
    parallel_for(boxes.size(), threads,
                 [&](std::size_t b) { images[b] = normalized_image(src, tgt, map, boxes[b]); });
    for (std::size_t axis : tgt.stable_axes()) {
      EntryMargin e;
      e.target_axis = axis;
      e.image = images.front()[axis];
      for (const auto& im : images) e.image = Interval::hull(e.image, im[axis]);
      e.margin = rounding::sub_down(1.0, e.image.mag());
      cert.entry.push_back(e);
    }
  } catch (const Error& err) {
    cert.passed = false;
    cert.failure = std::string("evaluation error: ") + err.what();
    return cert;
  }

  std::ostringstream why;
  for (const auto& w : cert.walls) {
    if (!(w.margin > 0.0)) {
      why << "wall z" << w.source_axis << (w.side < 0 ? "=-1" : "=+1") << " maps to " << w.image
          << " in target axis " << w.target_axis << "; ";
    }
  }
  for (const auto& e : cert.entry) {
    if (!(e.margin > 0.0)) why << "stable target axis " << e.target_axis << " image " << e.image << " not inside (-1,1); ";
  }
  cert.failure = why.str();
  if (!cert.failure.empty()) cert.failure.resize(cert.failure.size() - 2);
  cert.passed = cert.failure.empty();
  return cert;
}

ChainResult check_chain(const std::vector<CoveringLink>& links, std::size_t threads) {
  for (const auto& l : links) {
    if (l.source == nullptr || l.target == nullptr || !l.map) throw ConfigError("covering link is incomplete");
  }
  ChainResult result;
  result.certificates.resize(links.size());
  parallel_for(links.size(), threads, [&](std::size_t i) {
    const auto& l = links[i];
    result.certificates[i] = check_covering(*l.source, *l.target, *l.map, l.grid, l.correspondence);
  });
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!result.certificates[i].passed) {
      result.first_failure = i;
      break;
    }
  }
  result.passed = !result.first_failure.has_value();
  return result;
}

ChainResult check_chain(const std::vector<HSet>& sets, std::shared_ptr<const VectorMap> map,
                        const std::vector<Grid>& grids, std::size_t threads) {
  if (sets.size() < 2) throw ConfigError("a chain needs at least two sets");
  if (!grids.empty() && grids.size() != sets.size() - 1) throw ConfigError("one grid per link is required");
  std::vector<CoveringLink> links;
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    CoveringLink l;
    l.source = &sets[i];
    l.target = &sets[i + 1];
    l.map = map;
    l.grid = grids.empty() ? Grid(sets[i].dimension(), 1) : grids[i];
    links.push_back(std::move(l));
  }
  return check_chain(links, threads);
}

}  // namespace tangency
