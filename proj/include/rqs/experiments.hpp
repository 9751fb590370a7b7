#pragma once

// Empirical checks: how many objects the regions of a random sample's subdivision
// meet, and how solver cost grows with input size.

#include <cstdint>
#include <string>
#include <vector>

#include "rqs/geom.hpp"

namespace rqs::exp {

struct ConcentrationTrial {
  std::uint64_t seed = 0;
  std::size_t regions = 0;
  std::size_t max_crossing = 0;  // largest number of non-sampled objects meeting one region
  double mean_crossing = 0;
  bool violated = false;
};

struct ConcentrationReport {
  std::string experiment;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 2;   // grid dimension; 2 elsewhere
  double delta = 0;    // lines only
  double epsilon = 0;
  double crossing_constant = 0;  // pseudolines: value used in the bound
  double measured_constant = 0;  // pseudolines: largest pairwise crossing count seen
  double bound = 0;
  std::vector<ConcentrationTrial> trials;

  double violation_fraction() const;
  bool passes() const { return violation_fraction() <= epsilon; }
};

/// nS random lines; each trial triangulates the arrangement of k of them and counts,
/// per face, the other lines meeting the closed face away from its corners.
/// Bound: delta * nS / k * (ln nS + ln(1/epsilon)).
ConcentrationReport concentration_lines(std::size_t n, std::size_t k, double delta, double epsilon, std::size_t trials,
                                        std::uint64_t seed);

/// Fraction of trials of `report` that would exceed the bound with delta replaced by `delta`.
double violation_fraction_at(const ConcentrationReport& report, double delta);

/// n unit disks with centers uniform in a side x side box; cells of the refined
/// subdivision of k sampled disks, counting disks whose circle meets the cell.
/// Bound: C n / k * (5 ln(C n) + ln(1/epsilon)) with C = crossing_cap.
ConcentrationReport concentration_pseudolines(std::size_t n, std::size_t k, double epsilon, std::size_t trials,
                                              std::uint64_t seed, double side = 10.0, double crossing_cap = 8.0);
/// Same over given centers. Throws std::invalid_argument when two centers coincide.
ConcentrationReport concentration_pseudolines(const std::vector<geom::ApproxPoint>& centers, std::size_t k, double epsilon,
                                              std::size_t trials, std::uint64_t seed, double crossing_cap = 8.0);

/// n axis-parallel hyperplanes in R^d, d in {2, 3}, with random axes and coordinates.
/// Bound: 2 d^2 n / k * (5 ln n + ln(1/epsilon)).
ConcentrationReport concentration_grid_d(std::size_t n, std::size_t d, std::size_t k, double epsilon, std::size_t trials,
                                         std::uint64_t seed);

struct ScalingPoint {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t grover_cost = 0;
  std::uint64_t classical_cost = 0;
  bool decision = false;
  bool exhausted = false;
  int depth = 0;
  std::size_t k = 0;
};

struct Fit {
  double slope = 0;
  double intercept = 0;
  std::vector<double> residuals;
};

/// Least squares of log(y) against log(x).
Fit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingReport {
  std::string family;
  double epsilon = 0;
  std::vector<ScalingPoint> points;
  Fit grover;
  Fit classical;
};

/// Families: "p3l" (random lines, no concurrence), "pair-const" (unit-cost pair check,
/// no solution) and "pair-linear" (pair check costing n). Default parameters per size;
/// a nonzero `fixed_k` samples that many objects at every level.
ScalingReport cost_scaling(const std::string& family, const std::vector<std::size_t>& sizes,
                           const std::vector<std::uint64_t>& seeds, double epsilon = 0.1, std::size_t fixed_k = 0);

std::string to_json(const ConcentrationReport& report);
std::string to_csv(const ConcentrationReport& report);
std::string to_json(const ScalingReport& report);
std::string to_csv(const ScalingReport& report);

/// Fixed 12-digit rendering used in every report.
std::string fixed12(double v);

}  // namespace rqs::exp
