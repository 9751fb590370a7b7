#include "rqs/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace rqs::grid {

GridArrangement::GridArrangement(std::vector<std::vector<Rat>> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > 3) throw std::invalid_argument("grid dimension must be 1..3");
  offsets_.push_back(0);
  for (const auto& ax : axes_) {
    if (!std::is_sorted(ax.begin(), ax.end())) throw std::invalid_argument("grid axis not sorted");
    offsets_.push_back(offsets_.back() + ax.size());
  }
}

std::pair<std::size_t, std::size_t> GridArrangement::locate(std::size_t id) const {
  if (id >= hyperplane_count()) throw std::out_of_range("hyperplane id");
  std::size_t a = static_cast<std::size_t>(std::upper_bound(offsets_.begin(), offsets_.end(), id) - offsets_.begin()) - 1;
  return {a, id - offsets_[a]};
}

std::size_t GridArrangement::cell_count() const {
  std::size_t c = 1;
  for (const auto& ax : axes_) c *= ax.size() + 1;
  return c;
}

std::pair<Rat, Rat> GridArrangement::extent(std::size_t a) const {
  const auto& ax = axes_[a];
  if (ax.empty()) return {Rat(-1), Rat(1)};
  return {ax.front() - 1, ax.back() + 1};
}

std::vector<GridCell> grid_cells(const GridArrangement& grid, std::span<const int> sample) {
  const std::size_t d = grid.dimension();
  std::vector<std::vector<std::size_t>> picked(d);
  std::vector<bool> sampled(grid.hyperplane_count(), false);
  for (int id : sample) {
    auto [a, i] = grid.locate(static_cast<std::size_t>(id));
    if (sampled[static_cast<std::size_t>(id)]) throw std::invalid_argument("hyperplane sampled twice");
    sampled[static_cast<std::size_t>(id)] = true;
    picked[a].push_back(i);
  }
  // Slab bounds per axis.
  std::vector<std::vector<std::pair<Rat, Rat>>> slabs(d);
  for (std::size_t a = 0; a < d; ++a) {
    std::sort(picked[a].begin(), picked[a].end());
    std::vector<Rat> cuts;
    for (std::size_t i : picked[a]) cuts.push_back(grid.axis(a)[i]);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto [lo, hi] = grid.extent(a);
    Rat prev = lo;
    for (const auto& c : cuts) {
      slabs[a].emplace_back(prev, c);
      prev = c;
    }
    slabs[a].emplace_back(prev, hi);
  }
  std::vector<GridCell> cells;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    GridCell cell;
    for (std::size_t a = 0; a < d; ++a) {
      const auto& [lo, hi] = slabs[a][idx[a]];
      const auto& ax = grid.axis(a);
      auto b = static_cast<std::size_t>(std::lower_bound(ax.begin(), ax.end(), lo) - ax.begin());
      auto e = static_cast<std::size_t>(std::upper_bound(ax.begin(), ax.end(), hi) - ax.begin());
      cell.slab.push_back(idx[a]);
      cell.lo.push_back(lo);
      cell.hi.push_back(hi);
      cell.range.emplace_back(b, e);
      for (std::size_t i = b; i < e; ++i) {
        std::size_t id = grid.id_of(a, i);
        if (!sampled[id]) cell.crossing.push_back(static_cast<int>(id));
      }
    }
    cells.push_back(std::move(cell));
    std::size_t a = 0;
    while (a < d && ++idx[a] == slabs[a].size()) idx[a++] = 0;
    if (a == d) break;
  }
  return cells;
}

}  // namespace rqs::grid
