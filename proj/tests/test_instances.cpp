#include <gtest/gtest.h>

#include "rqs/generators.hpp"
#include "rqs/instances.hpp"
#include "rqs/oracles.hpp"

using namespace rqs;
using namespace rqs::problems;
using geom::ExactLine;
using geom::ExactPoint;
using geom::Rat;

namespace {

std::vector<ExactPoint> square(long x, long y, long side) {
  return {{Rat(x), Rat(y)}, {Rat(x + side), Rat(y)}, {Rat(x + side), Rat(y + side)}, {Rat(x), Rat(y + side)}};
}

// Comb: base from (0,0) to (11,0), three teeth of width 1 rising to y = 4.
std::vector<ExactPoint> comb() {
  std::vector<ExactPoint> v{{Rat(0), Rat(0)}, {Rat(11), Rat(0)}, {Rat(11), Rat(4)}, {Rat(10), Rat(4)}, {Rat(10), Rat(1)},
                            {Rat(6), Rat(1)},  {Rat(6), Rat(4)},  {Rat(5), Rat(4)},   {Rat(5), Rat(1)},  {Rat(1), Rat(1)},
                            {Rat(1), Rat(4)},  {Rat(0), Rat(4)}};
  return v;
}

}  // namespace

TEST(Translation, Examples) {
  IntervalInstance inst{{{Rat(0), Rat(1)}}, {{Rat(5), Rat(7)}}};
  EXPECT_TRUE(check_translation(inst, Rat(5)));
  EXPECT_TRUE(check_translation(inst, Rat(6)));
  EXPECT_FALSE(check_translation(inst, Rat(13, 2)));
  Rng rng(3);
  auto big = gen::interval_instance(50, rng, false);
  auto t = oracles::oracle_interval_containment(big);
  ASSERT_TRUE(t);
  EXPECT_TRUE(check_translation(big, *t));
}

TEST(Translation, RejectsOverlappingInput) {
  IntervalInstance bad{{{Rat(0), Rat(2)}, {Rat(1), Rat(3)}}, {}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(PolygonCut, PieceCounts) {
  PolygonInstance convex{square(0, 0, 4), 0, 3};
  EXPECT_EQ(count_pieces(convex, ExactLine::from_slope(Rat(1, 3), Rat(1, 2))), 2u);
  EXPECT_EQ(count_pieces(convex, ExactLine::horizontal(Rat(9))), 1u);
  PolygonInstance teeth{comb(), 0, 4};
  teeth.validate();
  const ExactLine across = ExactLine::horizontal(Rat(5, 2));
  EXPECT_EQ(count_pieces(teeth, across), 4u);
  EXPECT_FALSE(crosses_edge(teeth, across));
  EXPECT_FALSE(is_cut_witness(teeth, across));
}

TEST(PolygonCut, CheckFindsSlightlyShiftedLine) {
  // Vertices 10 and 3 lie on y = 4; a line just below crosses the three teeth, never edge 0.
  PolygonInstance teeth{comb(), 0, 4};
  EXPECT_FALSE(polygon_cut_check(teeth, 10, 3));
  // With e a tooth's inner side the shifted line is a witness.
  teeth.edge = 3;
  auto line = polygon_cut_check(teeth, 10, 3);
  ASSERT_TRUE(line);
  EXPECT_TRUE(is_cut_witness(teeth, *line));
  EXPECT_THROW(polygon_cut_check(teeth, 2, 2), std::invalid_argument);
}

TEST(PolygonCut, ChecksAgreeWithBruteForcePieceCount) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    PolygonInstance poly{gen::star_polygon(12, rng), 0, 3};
    for (int u = 0; u < 12; ++u)
      for (int v = 0; v < 12; ++v) {
        if (u == v) continue;
        if (auto l = polygon_cut_check(poly, u, v)) {
          EXPECT_EQ(count_pieces(poly, *l), 3u);
          EXPECT_TRUE(crosses_edge(poly, *l));
        }
      }
  }
}

TEST(Projections, Examples) {
  ProjectionInstance two{{square(0, 0, 1), square(2, 0, 1)}};
  auto d = disjoint_projection_check(two, 0, 1);
  ASSERT_TRUE(d);
  EXPECT_TRUE(projections_disjoint(two, *d));
  EXPECT_TRUE(projections_disjoint(two, {Rat(1), Rat(0)}));

  ProjectionInstance overlapping{{square(0, 0, 2), square(1, 1, 2)}};
  EXPECT_FALSE(disjoint_projection_check(overlapping, 0, 1));

  ProjectionInstance row{{square(0, 0, 2), square(1, 0, 2), square(2, 0, 2)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) EXPECT_FALSE(disjoint_projection_check(row, i, j));
}

TEST(Oracles, Examples) {
  auto tri = oracles::oracle_min_area_triangle({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  EXPECT_EQ(tri.area2, 1);
  EXPECT_EQ(oracles::oracle_min_area_triangle({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(3), Rat(3)}}).area2, 0);

  EXPECT_EQ(oracles::oracle_max_disk_depth({{0, 0}}).depth, 1);
  EXPECT_EQ(oracles::oracle_max_disk_depth({{0, 0}, {3, 0}}).depth, 1);
  EXPECT_EQ(oracles::oracle_max_disk_depth({{0, 0}, {0.4, 0}, {0, 0.4}, {-0.3, 0.2}, {0.1, -0.45}}).depth, 5);

  IntervalInstance same{{{Rat(0), Rat(1)}, {Rat(4), Rat(6)}}, {{Rat(0), Rat(1)}, {Rat(4), Rat(6)}}};
  EXPECT_EQ(*oracles::oracle_interval_containment(same), 0);

  PairCheck planted = [](int i, int j, QueryLedger&) -> std::optional<PairWitness> {
    if (i == 3 && j == 7) return PairWitness{i, j, {}, {}};
    return std::nullopt;
  };
  auto hit = oracles::oracle_pair_search(10, planted);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->i, 3);
  EXPECT_EQ(hit->j, 7);

  std::vector<ExactLine> pencil{ExactLine::horizontal(1), ExactLine::vertical(2), ExactLine::from_slope(1, -1)};
  auto p = oracles::oracle_concurrence(pencil);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->point, (ExactPoint{Rat(2), Rat(1)}));
  std::vector<ExactLine> generic{ExactLine::horizontal(0), ExactLine::vertical(0), ExactLine::from_slope(1, 1)};
  EXPECT_FALSE(oracles::oracle_concurrence(generic));
}

TEST(Oracles, PlantedPencilAmongThirty) {
  Rng rng(4);
  auto lines = gen::planted_concurrence(30, rng);
  auto p = oracles::oracle_concurrence(lines);
  ASSERT_TRUE(p);
  EXPECT_GE(p->lines.size(), 3u);
  for (int id : p->lines) EXPECT_EQ(lines[static_cast<std::size_t>(id)].side(p->point), 0);
}
