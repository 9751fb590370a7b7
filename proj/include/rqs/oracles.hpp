#pragma once

// Exhaustive reference solvers. They use only the geometry primitives and instance checks.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rqs/geom.hpp"
#include "rqs/instances.hpp"

namespace rqs::oracles {

using geom::ApproxPoint;
using geom::ExactLine;
using geom::ExactPoint;
using geom::Rat;

struct MinTriangle {
  Rat area2;
  std::array<int, 3> points{};
};
/// Smallest twice-area over all triples, first minimal triple in lexicographic order.
MinTriangle oracle_min_area_triangle(const std::vector<ExactPoint>& points);

struct MaxDepth {
  int depth = 0;
  ApproxPoint point;
};
/// Deepest point among centers and pairwise circle intersections.
MaxDepth oracle_max_disk_depth(const std::vector<ApproxPoint>& centers);

/// First translation aligning two endpoints that passes check_translation.
std::optional<Rat> oracle_interval_containment(const problems::IntervalInstance& inst);

/// First ordered pair (i, j), i != j, accepted by the check.
std::optional<PairWitness> oracle_pair_search(std::size_t n, const problems::PairCheck& check);

/// A point on three or more lines, with the lines through it.
std::optional<PointWitness> oracle_concurrence(const std::vector<ExactLine>& lines);

}  // namespace rqs::oracles
