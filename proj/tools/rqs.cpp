#include <iostream>

#include <CLI11.hpp>

#include "rqs/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Recursive random-sampling search with a simulated Grover cost ledger"};
  app.require_subcommand(1);

  rqs::cli::SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Decide one instance and print a JSON result");
  s->add_option("--problem", solve.problem, "p3l | triangle | disk | intervals | pair | polygon-cut | disjoint-proj")
      ->required();
  s->add_option("--input", solve.input, "instance file");
  s->add_option("--epsilon", solve.epsilon, "failure probability");
  s->add_option("--delta", solve.delta, "oversize slack");
  s->add_option("--seed", solve.seed);
  s->add_option("--backend", solve.backend, "rqs | bruteforce");
  s->add_option("--emit-svg", solve.emit_svg, "write a picture of the root subdivision");
  s->add_option("--area-bound", solve.area_bound, "triangle: area bound, overrides the file");
  s->add_option("--depth-target", solve.depth_target, "disk: depth target, overrides the file");
  s->add_option("--pieces", solve.pieces, "polygon-cut: piece count, overrides the file");

  rqs::cli::ExperimentOptions ex;
  auto* e = app.add_subcommand("experiment", "Run a concentration or cost-scaling experiment");
  e->add_option("--experiment", ex.experiment, "conc-lines | conc-disks | conc-grid | cost-scaling")->required();
  e->add_option("--n", ex.n);
  e->add_option("--k", ex.k);
  e->add_option("--delta", ex.delta);
  e->add_option("--epsilon", ex.epsilon);
  e->add_option("--trials", ex.trials);
  e->add_option("--seed", ex.seed);
  e->add_option("--d", ex.d, "grid dimension, 2 or 3");
  e->add_option("--sizes", ex.sizes, "cost-scaling sizes")->delimiter(',');
  e->add_option("--seeds", ex.seeds, "cost-scaling seeds")->delimiter(',');
  e->add_option("--family", ex.family, "p3l | pair-const | pair-linear");
  e->add_option("--fixed-k", ex.fixed_k, "sample size at every level");
  e->add_option("--out", ex.out, "output prefix for .json and .csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  rqs::cli::Outcome o;
  if (*s) {
    if (solve.input.empty()) {
      std::cerr << "error: --input is required\n";
      return 1;
    }
    o = rqs::cli::run_solve(solve);
  } else {
    o = rqs::cli::run_experiment(ex);
  }
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}
