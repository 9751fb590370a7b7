#include <gtest/gtest.h>

#include <cmath>

#include "rqs/experiments.hpp"

using namespace rqs::exp;
using rqs::geom::ApproxPoint;

TEST(Fit, RecoversPowerLaw) {
  std::vector<double> x{10, 20, 40, 80}, y;
  for (double v : x) y.push_back(3 * v * v);
  auto f = fit_loglog(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, std::log(3.0), 1e-12);
  for (double r : f.residuals) EXPECT_NEAR(r, 0.0, 1e-12);
  EXPECT_THROW(fit_loglog({5, 5}, {1, 2}), std::invalid_argument);
}

TEST(ConcentrationLines, SmallRunStaysUnderBound) {
  auto r = concentration_lines(200, 20, 2.0, 0.05, 5, 3);
  ASSERT_EQ(r.trials.size(), 5u);
  EXPECT_TRUE(r.passes());
  for (const auto& t : r.trials) {
    EXPECT_GT(t.regions, 0u);
    EXPECT_LE(static_cast<double>(t.max_crossing), r.bound);
  }
}

TEST(ConcentrationLines, NearlyFullSampleHasNoViolations) {
  auto r = concentration_lines(40, 39, 2.0, 0.05, 3, 1);
  EXPECT_EQ(r.violation_fraction(), 0.0);
  for (const auto& t : r.trials) EXPECT_LE(t.max_crossing, 1u);
}

TEST(ConcentrationLines, TinyDeltaIsANegativeControl) {
  auto r = concentration_lines(200, 20, 0.01, 0.05, 5, 3);
  EXPECT_EQ(r.violation_fraction(), 1.0);
  EXPECT_EQ(violation_fraction_at(r, 0.01), 1.0);
}

TEST(ConcentrationLines, RejectsBadParameters) {
  EXPECT_THROW(concentration_lines(100, 10, 2, 0.05, 0, 1), std::invalid_argument);
  EXPECT_THROW(concentration_lines(100, 100, 2, 0.05, 1, 1), std::invalid_argument);
}

TEST(ConcentrationDisks, DisjointDisksCrossAtMostOnce) {
  std::vector<ApproxPoint> centers;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) centers.push_back({3.0 * i + 0.1 * j, 3.0 * j});
  // Only the one unsampled disk can cross a cell.
  auto r = concentration_pseudolines(centers, centers.size() - 1, 0.05, 3, 2);
  for (const auto& t : r.trials) EXPECT_EQ(t.max_crossing, 1u);
  EXPECT_GE(r.measured_constant, 1.0);
  EXPECT_LE(r.measured_constant, r.crossing_constant);
}

TEST(ConcentrationDisks, RejectsCoincidentCenters) {
  std::vector<ApproxPoint> centers{{0, 0}, {1e-12, 0}, {0.5, 0.5}};
  EXPECT_THROW(concentration_pseudolines(centers, 1, 0.05, 1, 1), std::invalid_argument);
}

TEST(ConcentrationDisks, RandomRunPasses) {
  auto r = concentration_pseudolines(60, 6, 0.05, 3, 5);
  EXPECT_TRUE(r.passes());
  EXPECT_LE(r.measured_constant, 8.0);
}

TEST(ConcentrationGrid, FullSampleHasNoCrossings) {
  for (std::size_t d : {2u, 3u}) {
    auto r = concentration_grid_d(30, d, 30, 0.05, 2, 4);
    for (const auto& t : r.trials) EXPECT_EQ(t.max_crossing, 0u);
  }
  EXPECT_THROW(concentration_grid_d(30, 4, 5, 0.05, 2, 4), std::invalid_argument);
}

TEST(ConcentrationGrid, ExamplesPass) {
  EXPECT_TRUE(concentration_grid_d(500, 2, 40, 0.05, 10, 1).passes());
  EXPECT_TRUE(concentration_grid_d(200, 3, 30, 0.05, 10, 1).passes());
}

TEST(Scaling, RejectsTooFewSizes) {
  EXPECT_THROW(cost_scaling("pair-const", {64, 128}, {1}), std::invalid_argument);
  EXPECT_THROW(cost_scaling("pair-const", {64, 64, 64}, {1}), std::invalid_argument);
  EXPECT_THROW(cost_scaling("nope", {16, 32, 64}, {1}), std::invalid_argument);
}

TEST(Scaling, ReportsAreReproducible) {
  auto a = cost_scaling("pair-const", {16, 32, 64}, {1, 2});
  auto b = cost_scaling("pair-const", {16, 32, 64}, {1, 2});
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(a.points.size(), 6u);
  for (const auto& p : a.points) EXPECT_LE(p.grover_cost, p.classical_cost);
  auto c = concentration_lines(100, 10, 2.0, 0.05, 3, 9);
  EXPECT_EQ(to_json(c), to_json(concentration_lines(100, 10, 2.0, 0.05, 3, 9)));
}

TEST(Report, FixedDigits) {
  EXPECT_EQ(fixed12(0.5), "0.500000000000");
  EXPECT_EQ(fixed12(-0.0), "0.000000000000");
}
