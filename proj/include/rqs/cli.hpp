#pragma once

// The command-line front end as plain functions so tests can drive it without a process.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rqs/io.hpp"

namespace rqs::cli {

/// Exit codes: 0 ok, 1 bad input or parameters, 2 every amplification run hit an oversize region.
struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

struct SolveOptions {
  std::string problem;  // p3l, triangle, disk, intervals, pair, polygon-cut, disjoint-proj
  std::string input;
  std::string backend = "rqs";  // or bruteforce
  double epsilon = 0.1;
  double delta = 2.0;
  std::uint64_t seed = 0;
  std::optional<std::string> emit_svg;
  std::optional<std::string> area_bound;
  std::optional<int> depth_target;
  std::optional<int> pieces;
};

Outcome run_solve(const SolveOptions& opt);
/// Same with the document already parsed; `input` is ignored.
Outcome run_solve(const SolveOptions& opt, const io::json& doc);

struct ExperimentOptions {
  std::string experiment;  // conc-lines, conc-disks, conc-grid, cost-scaling
  std::optional<std::size_t> n, k, trials, d, fixed_k;
  std::optional<double> delta, epsilon;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::string family = "p3l";
  std::optional<std::string> out;  // file prefix; .json and .csv are appended
};

Outcome run_experiment(const ExperimentOptions& opt);

}  // namespace rqs::cli
