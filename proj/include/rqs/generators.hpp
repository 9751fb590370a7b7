#pragma once

// Random instance families. Rational coordinates are integers in [-10^6, 10^6] over 1000,
// i.e. uniform on a 1e-3 lattice of [-1000, 1000].

#include <cstddef>
#include <vector>

#include "rqs/engine.hpp"
#include "rqs/instances.hpp"

namespace rqs::gen {

using geom::ExactLine;
using geom::ExactPoint;
using geom::Rat;

Rat random_rational(Rng& rng, long scale = 1000000, long den = 1000);

/// Duals of distinct random points: lines y = px*x - py.
std::vector<ExactLine> random_lines(std::size_t n, Rng& rng);
/// Random lines with three of them replaced by lines through a common random point.
std::vector<ExactLine> planted_concurrence(std::size_t n, Rng& rng);

/// Distinct points with integer coordinates in [0, side).
std::vector<ExactPoint> lattice_points(std::size_t n, long side, Rng& rng);

/// Centers uniform in [0, side]^2.
std::vector<geom::ApproxPoint> disk_centers(std::size_t n, double side, Rng& rng);

/// P is a shifted copy of some Q intervals (a yes-instance) unless `perturb`, which widens one P interval.
problems::IntervalInstance interval_instance(std::size_t n, Rng& rng, bool perturb);

/// Star-shaped simple polygon with integer vertices, counter-clockwise.
std::vector<ExactPoint> star_polygon(std::size_t n, Rng& rng);

/// Convex polygons (random triangles and quadrilaterals) scattered in a square of the given side.
std::vector<std::vector<ExactPoint>> convex_polygons(std::size_t n, long side, Rng& rng);

}  // namespace rqs::gen
