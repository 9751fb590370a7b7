#pragma once

// Problem adapters for the recursive search engine. Each adapter is a view over a
// shared instance plus the global ids of the objects it still considers, so
// witnesses produced at any depth refer to the original input.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rqs/arrangement.hpp"
#include "rqs/engine.hpp"
#include "rqs/instances.hpp"

namespace rqs::problems {

/// Is some point on three or more of the lines? Duplicate lines are rejected.
std::unique_ptr<ProblemAdapter> p3l_adapter(std::vector<ExactLine> lines);

/// Is there a triangle of twice-area at most area_bound2? Searches the dual arrangement.
std::unique_ptr<ProblemAdapter> triangle_adapter(TriangleInstance inst);

/// Is there a unit disk covering depth_target centers, i.e. a point of that depth?
std::unique_ptr<ProblemAdapter> disk_adapter(DiskInstance inst);

/// Is there a translation moving every P interval into some Q interval?
std::unique_ptr<ProblemAdapter> interval_adapter(IntervalInstance inst);

/// Is there a pair (i, j), i != j, accepted by the pair check?
std::unique_ptr<ProblemAdapter> pair_adapter(PairSearchInstance inst);

/// Pair checks over vertex pairs and polygon pairs. Each evaluation charges its linear cost.
PairSearchInstance polygon_cut_pairs(PolygonInstance poly);
PairSearchInstance disjoint_projection_pairs(ProjectionInstance inst);

/// Triangle search preceded by a collinearity screen: concurrent dual lines (run through the
/// point-on-three-lines search) and three points sharing an abscissa. Ledgers of both stages add up.
RqsResult solve_triangle(const TriangleInstance& inst, const RqsParams& params, std::uint64_t seed);

/// A zone vertex on lines a and b facing the edge on line c across the support line.
struct VerticalPair {
  ExactPoint vertex;
  int a = -1;
  int b = -1;
  int c = -1;
  Rat distance;  // vertical, non-negative
};

/// Every vertex of a zone face paired with the edge vertically opposite it on the other
/// envelope, kept when the two lie on opposite sides of (or on) the support line.
std::vector<VerticalPair> zone_vertical_pairs(std::span<const ExactLine> lines, const arr::Zone& zone,
                                              const ExactLine& support);
/// The pair of smallest vertical distance, ties broken by (a, b, c).
std::optional<VerticalPair> zone_min_vertical_pair(std::span<const ExactLine> lines, const arr::Zone& zone,
                                                   const ExactLine& support);

}  // namespace rqs::problems
