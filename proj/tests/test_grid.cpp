#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "rqs/grid.hpp"

using rqs::geom::Rat;
using namespace rqs::grid;

namespace {

std::vector<Rat> seq(int from, int to) {
  std::vector<Rat> v;
  for (int i = from; i <= to; ++i) v.emplace_back(i);
  return v;
}

}  // namespace

TEST(Grid, TwoLinesGiveFourCells) {
  GridArrangement g({{Rat(1)}, {Rat(1)}});
  std::vector<int> sample{0, 1};
  auto cells = grid_cells(g, sample);
  EXPECT_EQ(cells.size(), 4u);
  for (const auto& c : cells) EXPECT_TRUE(c.crossing.empty());
  EXPECT_EQ(g.cell_count(), 4u);
}

TEST(Grid, ThreeDimensionalSingleCut) {
  GridArrangement g({{Rat(0)}, {}, {}});
  std::vector<int> sample{0};
  EXPECT_EQ(grid_cells(g, sample).size(), 2u);
}

TEST(Grid, CrossingListsMatchSlabMembership) {
  GridArrangement g({seq(1, 10), seq(1, 10)});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> ids(20);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(4);
    auto cells = grid_cells(g, ids);
    std::size_t expect_cells = 1;
    for (std::size_t a = 0; a < 2; ++a) {
      std::size_t cuts = 0;
      for (int id : ids) cuts += g.locate(static_cast<std::size_t>(id)).first == a;
      expect_cells *= cuts + 1;
    }
    ASSERT_EQ(cells.size(), expect_cells);
    for (const auto& c : cells) {
      std::vector<int> expect;
      for (int id = 0; id < 20; ++id) {
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) continue;
        auto [a, i] = g.locate(static_cast<std::size_t>(id));
        const Rat& x = g.axis(a)[i];
        if (c.lo[a] <= x && x <= c.hi[a]) expect.push_back(id);
      }
      EXPECT_EQ(c.crossing, expect);
    }
  }
}
