#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rqs/curved.hpp"

using namespace rqs::curved;

namespace {

std::vector<UnitDisk> random_disks(std::size_t n, double side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<UnitDisk> d;
  while (d.size() < n) {
    UnitDisk c{{u(rng), u(rng)}};
    bool ok = std::none_of(d.begin(), d.end(), [&](const UnitDisk& e) { return near_degenerate(c, e); });
    if (ok) d.push_back(c);
  }
  return d;
}

std::vector<int> all_ids(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<CurvedCell> refined_cells(const std::vector<UnitDisk>& disks, const std::vector<int>& sample, Rect box) {
  auto arr = build_disk_arrangement(disks, sample, box);
  auto pieces = pseudoline_refine(arr);
  return monotone_sweep_subdivide(pieces, false);
}

}  // namespace

TEST(DiskArrangement, OneDiskTwoFaces) {
  std::vector<UnitDisk> d{{{0, 0}}};
  auto arr = build_disk_arrangement(d, all_ids(1), disk_bbox(d));
  EXPECT_EQ(arr.face_count(), 2u);
}

TEST(DiskArrangement, TwoDisksAtDistanceOne) {
  std::vector<UnitDisk> d{{{0, 0}}, {{1, 0}}};
  auto arr = build_disk_arrangement(d, all_ids(2), disk_bbox(d));
  EXPECT_EQ(arr.face_count(), 4u);  // lens, two crescents, outside
}

TEST(DiskArrangement, RejectsDuplicateCenters) {
  std::vector<UnitDisk> d{{{0, 0}}, {{0, 0}}};
  EXPECT_THROW(build_disk_arrangement(d, all_ids(2), disk_bbox(d)), std::invalid_argument);
}

TEST(DiskArrangement, FacesHaveUniformSignature) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto d = random_disks(5, 4.0, seed);
    auto arr = build_disk_arrangement(d, all_ids(5), disk_bbox(d));
    std::set<std::vector<bool>> signatures;
    for (const auto& face : arr.faces) {
      std::vector<bool> sig;
      for (std::size_t f = 0; f < face.size(); ++f) {
        auto p = face[f].interior_point();
        std::vector<bool> s;
        for (const auto& disk : d) s.push_back(std::hypot(p.x - disk.center.x, p.y - disk.center.y) < 1);
        if (f == 0) sig = s;
        EXPECT_EQ(s, sig) << "seed " << seed;
      }
      signatures.insert(sig);
    }
    // Monte-Carlo: every signature seen by random points belongs to some face.
    std::mt19937_64 rng(seed);
    Rect b = arr.box;
    std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
    std::set<std::vector<bool>> seen;
    for (int i = 0; i < 20000; ++i) {
      ApproxPoint p{ux(rng), uy(rng)};
      std::vector<bool> s;
      for (const auto& disk : d) s.push_back(std::hypot(p.x - disk.center.x, p.y - disk.center.y) < 1);
      seen.insert(s);
    }
    for (const auto& s : seen) EXPECT_TRUE(signatures.count(s)) << "seed " << seed;
    EXPECT_GE(arr.face_count(), seen.size());
  }
}

TEST(Refine, OneDiskInteriorFourCells) {
  std::vector<UnitDisk> d{{{0, 0}}};
  auto cells = refined_cells(d, all_ids(1), disk_bbox(d));
  int inside = 0;
  for (const auto& c : cells) {
    auto p = c.interior_point();
    inside += std::hypot(p.x, p.y) < 1;
  }
  EXPECT_EQ(inside, 4);
}

TEST(Refine, EmptySample) {
  std::vector<UnitDisk> d{{{0, 0}}};
  auto arr = build_disk_arrangement(d, {}, disk_bbox(d));
  EXPECT_TRUE(pseudoline_refine(arr).empty());
}

TEST(Refine, TangentPointIsVertex) {
  std::vector<UnitDisk> d{{{0, 0}}, {{2, 0.5}}};
  // move to exact tangency at distance 2
  d[1].center = {2.0 * std::cos(0.3), 2.0 * std::sin(0.3)};
  auto cells = refined_cells(d, all_ids(2), disk_bbox(d));
  ApproxPoint t{std::cos(0.3), std::sin(0.3)};
  bool corner = false;
  for (const auto& c : cells)
    for (const auto& k : c.corners()) corner |= std::hypot(k.x - t.x, k.y - t.y) < 1e-7;
  EXPECT_TRUE(corner);
}

TEST(Sweep, CircleGivesTwoCells) {
  ApproxPoint c{0, 0};
  std::vector<ArcOrSeg> circle{ArcOrSeg::arc(0, c, 1, -1, 0), ArcOrSeg::arc(0, c, 1, 0, 1), ArcOrSeg::arc(0, c, -1, -1, 0),
                               ArcOrSeg::arc(0, c, -1, 0, 1)};
  auto cells = monotone_sweep_subdivide(circle);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_NEAR(cells[0].area() + cells[1].area(), M_PI, 1e-3);
}

TEST(Sweep, RectangleGivesOneCell) {
  std::vector<ArcOrSeg> rect{ArcOrSeg::segment(-1, {0, 0}, {2, 0}), ArcOrSeg::segment(-1, {2, 0}, {2, 1}),
                             ArcOrSeg::segment(-1, {2, 1}, {0, 1}), ArcOrSeg::segment(-1, {0, 1}, {0, 0})};
  auto cells = monotone_sweep_subdivide(rect);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_NEAR(cells[0].area(), 2.0, 1e-12);
}

TEST(Sweep, RejectsSelfIntersection) {
  std::vector<ArcOrSeg> bow{ArcOrSeg::segment(-1, {0, 0}, {2, 2}), ArcOrSeg::segment(-1, {2, 2}, {2, 0}),
                            ArcOrSeg::segment(-1, {2, 0}, {0, 2}), ArcOrSeg::segment(-1, {0, 2}, {0, 0})};
  EXPECT_THROW(monotone_sweep_subdivide(bow), std::invalid_argument);
}

TEST(Sweep, CombFaceCellsStayConstantSize) {
  std::vector<UnitDisk> d;
  for (int i = 0; i < 6; ++i) d.push_back({{1.5 * i, (i % 2) * 0.7}});
  auto cells = refined_cells(d, all_ids(d.size()), disk_bbox(d));
  for (const auto& c : cells) {
    EXPECT_LE(c.boundary().size(), 4u);
    EXPECT_LE(c.segment_count(), 2u);
  }
}

TEST(Sweep, CellsTileTheBox) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto d = random_disks(6, 5.0, seed);
    Rect b = disk_bbox(d);
    auto cells = refined_cells(d, all_ids(d.size()), b);
    double total = 0;
    for (const auto& c : cells) {
      ASSERT_LE(c.boundary().size(), 4u);
      total += c.area(256);
    }
    EXPECT_NEAR(total, (b.xmax - b.xmin) * (b.ymax - b.ymin), 1e-2 * (b.xmax - b.xmin) * (b.ymax - b.ymin));
  }
}

TEST(Classify, CoveringCrossingAndCornerTouch) {
  std::vector<UnitDisk> d{{{0, 0}}};
  auto cells = refined_cells(d, all_ids(1), disk_bbox(d));
  std::vector<int> subset{0};
  classify_disks_per_cell(cells, d, subset);
  for (const auto& c : cells) {
    auto p = c.interior_point();
    if (std::hypot(p.x, p.y) < 1) EXPECT_EQ(c.covering, 1);
    else EXPECT_EQ(c.covering, 0);
  }
  // A disk touching a unit square only at its corner (1,1) is excluded.
  CurvedCell sq;
  sq.y_bottom = 0;
  sq.y_top = 1;
  sq.left = ArcOrSeg::segment(-1, {0, 0}, {0, 1});
  sq.right = ArcOrSeg::segment(-1, {1, 0}, {1, 1});
  std::vector<UnitDisk> t{{{1 + std::sqrt(0.5), 1 + std::sqrt(0.5)}}, {{0.5, 2.0}}, {{0.5, 0.5}}};
  std::vector<CurvedCell> one{sq};
  std::vector<int> ids{0, 1, 2};
  classify_disks_per_cell(one, t, ids);
  EXPECT_EQ(one[0].covering, 1);
  EXPECT_EQ(one[0].crossing, std::vector<int>{1});
}

TEST(Classify, MatchesPointSampling) {
  auto d = random_disks(30, 6.0, 3);
  std::vector<int> sample{0, 1, 2, 3, 4};
  auto cells = refined_cells(d, sample, disk_bbox(d));
  auto ids = all_ids(d.size());
  classify_disks_per_cell(cells, d, ids);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& c : cells) {
    std::vector<int> inside_all(d.size(), 1), inside_any(d.size(), 0);
    for (int s = 0; s < 2000; ++s) {
      double y = c.y_bottom + u(rng) * (c.y_top - c.y_bottom);
      double x = c.left.x_at(y) + u(rng) * (c.right.x_at(y) - c.left.x_at(y));
      for (std::size_t i = 0; i < d.size(); ++i) {
        bool in = std::hypot(x - d[i].center.x, y - d[i].center.y) <= 1;
        inside_all[i] &= in;
        inside_any[i] |= in;
      }
    }
    int covering = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      covering += inside_all[i] && std::find(c.crossing.begin(), c.crossing.end(), static_cast<int>(i)) == c.crossing.end();
      // A disk seen strictly inside sampled points must be covering or crossing.
      if (inside_any[i] && !inside_all[i])
        EXPECT_NE(std::find(c.crossing.begin(), c.crossing.end(), static_cast<int>(i)), c.crossing.end());
    }
    EXPECT_GE(covering, c.covering);
  }
}
