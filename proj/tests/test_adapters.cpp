#include <gtest/gtest.h>

#include <cmath>

#include "rqs/adapters.hpp"
#include "rqs/generators.hpp"
#include "rqs/oracles.hpp"

using namespace rqs;
using namespace rqs::problems;
using geom::ExactLine;
using geom::ExactPoint;
using geom::Rat;

namespace {

RqsParams small_k(std::size_t n, std::size_t k = 0) {
  if (k == 0) k = std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
  return fixed_sample_params(n, k, 0.1, 2.0, 2 * k);
}

}  // namespace

TEST(Params, ChooseParamsFollowsFormula) {
  auto p = choose_params(1000, 0.1);
  const double ln = std::log(1000.0);
  EXPECT_NEAR(p.alpha, std::sqrt(2 * ln / (1 + std::log(ln))), 1e-12);
  const double raw = std::pow(1000.0, 1 / p.alpha) * 2 * (ln + std::log(10.0));
  EXPECT_EQ(p.base_threshold, static_cast<std::size_t>(std::ceil(raw)));
  EXPECT_EQ(p.k, std::min<std::size_t>(p.base_threshold, 999));
  EXPECT_THROW(choose_params(3, 0.1), std::invalid_argument);
  EXPECT_THROW(choose_params(100, 0.0), std::invalid_argument);
  EXPECT_THROW(choose_params(100, 1.0), std::invalid_argument);
  EXPECT_TRUE(p.exhaustive_at(3));
  EXPECT_EQ(small_k(40).k_for(40), 7u);
}

TEST(P3l, PlantedPointAmongFifty) {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto lines = gen::planted_concurrence(50, rng);
    auto truth = oracles::oracle_concurrence(lines);
    ASSERT_TRUE(truth);
    auto r = rqs_solve(*p3l_adapter(lines), small_k(50), 100 + trial);
    if (r.exhausted) continue;
    ASSERT_TRUE(r.decision);
    EXPECT_EQ(std::get<PointWitness>(*r.witness).point, truth->point);
  }
}

TEST(P3l, TrivialCases) {
  std::vector<ExactLine> parallel{ExactLine::horizontal(0), ExactLine::horizontal(1), ExactLine::horizontal(2)};
  EXPECT_FALSE(rqs_solve(*p3l_adapter(parallel), choose_params(4, 0.1), 1).decision);
  std::vector<ExactLine> pencil{ExactLine::horizontal(0), ExactLine::vertical(0), ExactLine::from_slope(1, 0)};
  auto r = rqs_solve(*p3l_adapter(pencil), choose_params(4, 0.1), 1);
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(std::get<PointWitness>(*r.witness).lines.size(), 3u);
}

TEST(P3l, MatchesOracleWithRecursion) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + static_cast<std::size_t>(trial);
    auto lines = trial % 2 ? gen::planted_concurrence(n, rng) : gen::random_lines(n, rng);
    const bool truth = oracles::oracle_concurrence(lines).has_value();
    auto r = rqs_solve(*p3l_adapter(lines), small_k(n), static_cast<std::uint64_t>(trial));
    if (r.exhausted) continue;
    EXPECT_EQ(r.decision, truth) << "trial " << trial;
    if (!r.decision) EXPECT_GE(r.max_depth, 1);
  }
}

TEST(Triangle, Examples) {
  TriangleInstance collinear{{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, Rat(0)};
  auto r = solve_triangle(collinear, choose_params(4, 0.1), 1);
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(std::get<TriangleWitness>(*r.witness).area2, 0);

  TriangleInstance unit{{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(10), Rat(10)}}, Rat(1)};
  r = solve_triangle(unit, choose_params(4, 0.1), 1);
  ASSERT_TRUE(r.decision);
  auto w = std::get<TriangleWitness>(*r.witness);
  EXPECT_EQ(w.area2, 1);
  EXPECT_EQ(w.points, (std::array<int, 3>{0, 1, 2}));
}

TEST(Triangle, ConvexPositionJustBelowOptimum) {
  std::vector<ExactPoint> pts;
  for (int i = 0; i < 20; ++i) pts.push_back({Rat(i), Rat(i * i)});
  auto best = oracles::oracle_min_area_triangle(pts);
  TriangleInstance inst{pts, best.area2 - Rat(1, 2)};
  auto r = solve_triangle(inst, small_k(20), 3);
  EXPECT_TRUE(r.exhausted || !r.decision);
  inst.area_bound2 = best.area2;
  r = solve_triangle(inst, small_k(20), 3);
  EXPECT_TRUE(r.exhausted || r.decision);
}

TEST(Triangle, MatchesOracleWithRecursion) {
  Rng rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 12 + static_cast<std::size_t>(trial);
    auto pts = gen::lattice_points(n, 40, rng);
    auto best = oracles::oracle_min_area_triangle(pts);
    TriangleInstance inst{pts, trial % 2 ? best.area2 : std::max(Rat(0), Rat(best.area2 - 1))};
    const bool truth = best.area2 <= inst.area_bound2;
    // The triangle search alone, so the recursion and span check are exercised.
    auto r = rqs_solve(*triangle_adapter(inst), small_k(n), static_cast<std::uint64_t>(trial));
    if (r.exhausted) continue;
    EXPECT_EQ(r.decision, truth) << "trial " << trial;
  }
}

TEST(ZonePairs, SlabAroundSupport) {
  std::vector<ExactLine> lines{ExactLine::horizontal(0), ExactLine::horizontal(1), ExactLine::from_slope(1, -10),
                               ExactLine::from_slope(-1, 10)};
  ExactLine support = ExactLine::horizontal(Rat(1, 2));
  auto zone = arr::zone_of_line(lines, support);
  auto best = zone_min_vertical_pair(lines, zone, support);
  ASSERT_TRUE(best);
  EXPECT_EQ(best->distance, 1);
  for (const auto& c : zone_vertical_pairs(lines, zone, support)) {
    EXPECT_LE(support.side(c.vertex) * support.side({c.vertex.x, lines[static_cast<std::size_t>(c.c)].y_at(c.vertex.x)}), 0);
  }
}

TEST(ZonePairs, MatchesExhaustiveZoneScan) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto lines = gen::random_lines(10, rng);
    ExactLine support = ExactLine::through({gen::random_rational(rng), gen::random_rational(rng)},
                                           {gen::random_rational(rng), gen::random_rational(rng)});
    auto zone = arr::zone_of_line(lines, support);
    // Every genuine vertex against every line edge of its face whose vertical through the vertex meets it.
    std::optional<Rat> best;
    for (const auto& f : zone.faces) {
      const std::size_t n = f.vertices.size();
      for (std::size_t i = 0; i < n; ++i) {
        const int a = f.carriers[(i + n - 1) % n], b = f.carriers[i];
        if (a < 0 || b < 0 || a == b) continue;
        const auto& v = f.vertices[i];
        for (std::size_t e = 0; e < n; ++e) {
          const int c = f.carriers[e];
          if (c < 0 || c == a || c == b) continue;
          const auto& p = f.vertices[e];
          const auto& q = f.vertices[(e + 1) % n];
          if (std::min(p.x, q.x) > v.x || std::max(p.x, q.x) < v.x) continue;
          ExactPoint w{v.x, lines[static_cast<std::size_t>(c)].y_at(v.x)};
          if (support.side(v) * support.side(w) > 0) continue;
          Rat d = abs(w.y - v.y);
          if (!best || d < *best) best = d;
        }
      }
    }
    auto got = zone_min_vertical_pair(lines, zone, support);
    ASSERT_EQ(got.has_value(), best.has_value());
    if (got) EXPECT_EQ(got->distance, *best);
  }
}

TEST(ZonePairs, FaceOnOneSideContributesNothing) {
  std::vector<ExactLine> lines{ExactLine::horizontal(5), ExactLine::horizontal(6), ExactLine::from_slope(1, 0)};
  ExactLine support = ExactLine::vertical(-100);
  auto zone = arr::zone_of_line(lines, support, {Rat(-200), Rat(-300), Rat(200), Rat(300)});
  for (const auto& c : zone_vertical_pairs(lines, zone, support)) EXPECT_EQ(support.side(c.vertex), 0);
}

TEST(Disk, Examples) {
  DiskInstance one{{{3, 4}, {10, 10}}, 1};
  auto r = rqs_solve(*disk_adapter(one), choose_params(4, 0.1), 1);
  EXPECT_TRUE(r.decision);
  DiskInstance three{{{0, 0}, {0.5, 0}, {0, 0.5}, {20, 20}}, 3};
  r = rqs_solve(*disk_adapter(three), choose_params(4, 0.1), 1);
  ASSERT_TRUE(r.decision);
  EXPECT_GE(std::get<DiskWitness>(*r.witness).depth, 3);
  DiskInstance spread{{{0, 0}, {3, 0}, {0, 3}, {3, 3}}, 2};
  EXPECT_FALSE(rqs_solve(*disk_adapter(spread), choose_params(4, 0.1), 1).decision);
  DiskInstance too_many{{{0, 0}, {0.1, 0}}, 3};
  auto t = rqs_solve(*disk_adapter(too_many), choose_params(4, 0.1), 1);
  EXPECT_FALSE(t.decision);
  EXPECT_EQ(t.ledger.total(), 0u);
}

TEST(Disk, MatchesOracleWithRecursion) {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 12 + 2 * static_cast<std::size_t>(trial);
    auto centers = gen::disk_centers(n, 5.0, rng);
    auto best = oracles::oracle_max_disk_depth(centers);
    DiskInstance inst{centers, best.depth + (trial % 2)};
    auto r = rqs_solve(*disk_adapter(inst), small_k(n), static_cast<std::uint64_t>(trial));
    if (r.exhausted) continue;
    EXPECT_EQ(r.decision, trial % 2 == 0) << "trial " << trial;
    if (!r.decision) EXPECT_GE(r.max_depth, 1);
  }
}

TEST(Intervals, Examples) {
  IntervalInstance a{{{Rat(0), Rat(1)}}, {{Rat(5), Rat(7)}}};
  auto r = rqs_solve(*interval_adapter(a), choose_params(4, 0.1), 1);
  ASSERT_TRUE(r.decision);
  EXPECT_TRUE(check_translation(a, std::get<TranslationWitness>(*r.witness).t));
  IntervalInstance b{{{Rat(0), Rat(1)}, {Rat(2), Rat(3)}}, {{Rat(0), Rat(1)}, {Rat(3), Rat(4)}}};
  EXPECT_FALSE(rqs_solve(*interval_adapter(b), choose_params(4, 0.1), 1).decision);
  IntervalInstance same{{{Rat(0), Rat(1)}, {Rat(3), Rat(4)}}, {{Rat(0), Rat(1)}, {Rat(3), Rat(4)}}};
  EXPECT_TRUE(rqs_solve(*interval_adapter(same), choose_params(4, 0.1), 1).decision);
}

TEST(Intervals, MatchesOracleWithRecursion) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = gen::interval_instance(10 + static_cast<std::size_t>(trial), rng, trial % 2 == 1);
    const bool truth = oracles::oracle_interval_containment(inst).has_value();
    auto adapter = interval_adapter(inst);
    auto r = rqs_solve(*adapter, small_k(adapter->size()), static_cast<std::uint64_t>(trial));
    if (r.exhausted) continue;
    EXPECT_EQ(r.decision, truth) << "trial " << trial;
  }
}

TEST(Pairs, PlantedAndEmpty) {
  PairSearchInstance planted{10, [](int i, int j, QueryLedger& c) -> std::optional<PairWitness> {
                               c.classical_ops += 1;
                               if (i == 3 && j == 7) return PairWitness{i, j, {}, {}};
                               return std::nullopt;
                             }};
  auto r = rqs_solve(*pair_adapter(planted), small_k(20), 2);
  ASSERT_TRUE(r.decision);
  EXPECT_EQ(std::get<PairWitness>(*r.witness).i, 3);
  EXPECT_EQ(std::get<PairWitness>(*r.witness).j, 7);
  PairSearchInstance never{10, [](int, int, QueryLedger&) -> std::optional<PairWitness> { return std::nullopt; }};
  EXPECT_FALSE(rqs_solve(*pair_adapter(never), small_k(20), 2).decision);
}

TEST(Pairs, PolygonCutMatchesOracle) {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    PolygonInstance poly{gen::star_polygon(10 + static_cast<std::size_t>(trial), rng), 0, 3 + trial % 2};
    auto inst = polygon_cut_pairs(poly);
    const bool truth = oracles::oracle_pair_search(inst.n, inst.check).has_value();
    auto r = rqs_solve(*pair_adapter(inst), small_k(2 * inst.n), static_cast<std::uint64_t>(trial));
    if (r.exhausted) continue;
    EXPECT_EQ(r.decision, truth) << "trial " << trial;
    if (r.decision) EXPECT_TRUE(is_cut_witness(poly, *std::get<PairWitness>(*r.witness).line));
  }
}

TEST(Pairs, DisjointProjections) {
  ProjectionInstance side_by_side{{{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}},
                                   {{Rat(2), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(1)}, {Rat(2), Rat(1)}}}};
  auto r = rqs_solve(*pair_adapter(disjoint_projection_pairs(side_by_side)), choose_params(4, 0.1), 1);
  ASSERT_TRUE(r.decision);
  EXPECT_TRUE(projections_disjoint(side_by_side, *std::get<PairWitness>(*r.witness).direction));
  ProjectionInstance overlapping{{{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}},
                                  {{Rat(1), Rat(1)}, {Rat(3), Rat(1)}, {Rat(3), Rat(3)}, {Rat(1), Rat(3)}}}};
  EXPECT_FALSE(disjoint_projection_check(overlapping, 0, 1));
}

TEST(Disk, ResidualTargetsAcrossCells) {
  Rng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    auto centers = gen::disk_centers(25, 4.0, rng);
    const int best = oracles::oracle_max_disk_depth(centers).depth;
    for (int q : {best, best + 1}) {
      auto root = disk_adapter({centers, q});
      Rng draw(static_cast<std::uint64_t>(trial));
      auto dec = root->decompose(5, draw);
      bool any = false;
      for (const auto& s : dec->subproblems) {
        QueryLedger scratch;
        auto child = root->restrict(*dec, s);
        if (auto w = child->base_solve(scratch)) {
          EXPECT_TRUE(root->verify(*w));
          any = true;
        }
      }
      EXPECT_EQ(any, q == best) << "trial " << trial << " q " << q;
    }
  }
}
