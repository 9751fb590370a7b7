#pragma once

// Arrangements of axis-parallel hyperplanes in R^d (d <= 3) clipped to a box.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rqs/geom.hpp"

namespace rqs::grid {

using geom::Rat;

/// Hyperplanes x_a = axes[a][i]. Hyperplane ids run over axis 0 first, then axis 1, ...
class GridArrangement {
 public:
  explicit GridArrangement(std::vector<std::vector<Rat>> axes);

  std::size_t dimension() const { return axes_.size(); }
  const std::vector<Rat>& axis(std::size_t a) const { return axes_[a]; }
  std::size_t hyperplane_count() const { return offsets_.back(); }
  /// (axis, index within axis) of a global hyperplane id.
  std::pair<std::size_t, std::size_t> locate(std::size_t id) const;
  std::size_t id_of(std::size_t axis, std::size_t index) const { return offsets_[axis] + index; }
  /// Number of cells of the full arrangement: product of (axis size + 1).
  std::size_t cell_count() const;
  /// Bounding box with margin 1 around every coordinate, per axis.
  std::pair<Rat, Rat> extent(std::size_t a) const;

 private:
  std::vector<std::vector<Rat>> axes_;
  std::vector<std::size_t> offsets_;
};

struct GridCell {
  std::vector<std::size_t> slab;  // slab index per axis
  std::vector<Rat> lo, hi;        // closed extent per axis
  /// Per axis, the half-open index range of coordinates lying in [lo, hi].
  std::vector<std::pair<std::size_t, std::size_t>> range;
  /// Non-sampled hyperplane ids meeting the closed cell.
  std::vector<int> crossing;
};

/// Cells of the arrangement of the sampled hyperplanes. Axis coordinates must be sorted.
std::vector<GridCell> grid_cells(const GridArrangement& grid, std::span<const int> sample);

}  // namespace rqs::grid
