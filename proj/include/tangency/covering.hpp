#ifndef TANGENCY_COVERING_HPP
#define TANGENCY_COVERING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tangency/hset.hpp"
#include "tangency/vector_map.hpp"

namespace tangency {

// Pairing of one unstable axis of the source with one of the target, with
// the orientation of the stretch.
struct AxisPair {
  std::size_t source_axis = 0;
  std::size_t target_axis = 0;
  int sign = 1;

  friend bool operator==(const AxisPair&, const AxisPair&) = default;
};

using AxisCorrespondence = std::vector<AxisPair>;

// Exit condition of one wall {z_axis = side} of the source.
struct WallMargin {
  std::size_t source_axis = 0;
  int side = 1;
  std::size_t target_axis = 0;
  // Hull over all wall pieces of sign * (normalized target coordinate).
  Interval image;
  // Lower bound of the distance of that image beyond the target face; the
  // wall passes when it is strictly positive.
  double margin = 0.0;
};

struct EntryMargin {
  std::size_t target_axis = 0;
  // Hull over all source pieces of the normalized target coordinate.
  Interval image;
  // Lower bound of 1 - |image|.
  double margin = 0.0;
};

// Record of a verified (or failed) covering relation N => M. A failure is
// always "inconclusive": interval bounds cannot refute a covering.
struct CoveringCertificate {
  std::string source;
  std::string target;
  std::string map;
  bool passed = false;
  AxisCorrespondence correspondence;
  std::vector<WallMargin> walls;
  std::vector<EntryMargin> entry;
  Grid grid;
  // Empty on success, otherwise the offending wall, axis or error.
  std::string failure;

  [[nodiscard]] double min_exit_margin() const;
  [[nodiscard]] double min_entry_margin() const;
};

// Enclosure of the target-normalized image of a source-normalized box: the
// intersection of direct evaluation and the mean-value form around the box
// midpoint.
IntervalVector normalized_image(const HSet& src, const HSet& tgt, const VectorMap& map, const IntervalVector& box);

// Pairs source and target unstable axes by the images of the wall midpoints:
// the bijection maximizing the product of stretches, signs from the
// direction of the stretch. Deterministic.
AxisCorrespondence detect_correspondence(const HSet& src, const HSet& tgt, const VectorMap& map);

// Verifies the sufficient conditions for N => M:
//   (i) every piece of every wall {z_i = -1} (resp. +1) of an unstable axis i
//       maps to sign_i * z'_{sigma(i)} < -1 (resp. > 1) in target
//       coordinates;
//  (ii) every piece of N maps strictly inside (-1, 1) in every stable target
//       coordinate.
// Together these give a homotopy to the linear model of degree +-1.
// Throws ShapeError when unstable dimensions differ; evaluation errors are
// reported as failures.
CoveringCertificate check_covering(const HSet& src, const HSet& tgt, const VectorMap& map, const Grid& grid,
                                   const std::optional<AxisCorrespondence>& correspondence = std::nullopt,
                                   std::size_t threads = 1);

struct CoveringLink {
  const HSet* source = nullptr;
  const HSet* target = nullptr;
  std::shared_ptr<const VectorMap> map;
  Grid grid;
  std::optional<AxisCorrespondence> correspondence;
};

struct ChainResult {
  std::vector<CoveringCertificate> certificates;
  bool passed = false;
  // Index of the first failing link, if any.
  std::optional<std::size_t> first_failure;
};

ChainResult check_chain(const std::vector<CoveringLink>& links, std::size_t threads = 1);
// Consecutive links N_0 => N_1 => ... under one map; grids[i] applies to link i
// (an empty list means grid 1 everywhere).
ChainResult check_chain(const std::vector<HSet>& sets, std::shared_ptr<const VectorMap> map,
                        const std::vector<Grid>& grids = {}, std::size_t threads = 1);

}  // namespace tangency

#endif  // TANGENCY_COVERING_HPP
