#include "rqs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rqs/adapters.hpp"
#include "rqs/arrangement.hpp"
#include "rqs/curved.hpp"
#include "rqs/experiments.hpp"
#include "rqs/oracles.hpp"

namespace rqs::cli {

namespace {

using io::json;

const std::set<std::string> kProblems = {"p3l", "triangle", "disk", "intervals", "pair", "polygon-cut", "disjoint-proj"};

struct Loaded {
  std::unique_ptr<ProblemAdapter> adapter;
  std::optional<problems::TriangleInstance> triangle;  // solved with its collinearity screen
  std::vector<geom::ExactLine> lines;
  std::optional<problems::DiskInstance> disks;
  std::optional<problems::IntervalInstance> intervals;
  std::optional<problems::PolygonInstance> polygon;
  std::optional<problems::ProjectionInstance> projection;
  std::optional<problems::PairSearchInstance> pairs;
};

Loaded load(const SolveOptions& opt, const json& doc) {
  Loaded l;
  const auto& p = opt.problem;
  if (p == "p3l") {
    l.lines = io::read_lines(doc);
    l.adapter = problems::p3l_adapter(l.lines);
  } else if (p == "triangle") {
    l.triangle = io::read_triangle(doc, opt.area_bound);
    l.adapter = problems::triangle_adapter(*l.triangle);
  } else if (p == "disk") {
    l.disks = io::read_disks(doc, opt.depth_target);
    l.adapter = problems::disk_adapter(*l.disks);
  } else if (p == "intervals") {
    l.intervals = io::read_intervals(doc);
    l.adapter = problems::interval_adapter(*l.intervals);
  } else if (p == "pair") {
    l.pairs = io::read_pair_table(doc);
  } else if (p == "polygon-cut") {
    l.polygon = io::read_polygon(doc, opt.pieces);
    l.pairs = problems::polygon_cut_pairs(*l.polygon);
  } else {
    l.projection = io::read_projection(doc);
    l.pairs = problems::disjoint_projection_pairs(*l.projection);
  }
  if (l.pairs) l.adapter = problems::pair_adapter(*l.pairs);
  return l;
}

struct Answer {
  bool decision = false;
  std::optional<Witness> witness;
};

Answer brute_force(const Loaded& l) {
  Answer a;
  if (!l.lines.empty()) {
    if (auto w = oracles::oracle_concurrence(l.lines)) a.witness = *w;
  } else if (l.triangle) {
    if (l.triangle->points.size() >= 3) {
      const auto m = oracles::oracle_min_area_triangle(l.triangle->points);
      if (m.area2 <= l.triangle->area_bound2) a.witness = TriangleWitness{m.points, m.area2};
    }
  } else if (l.disks) {
    // no point lies in more than n disks
    if (static_cast<std::size_t>(l.disks->depth_target) <= l.disks->points.size()) {
      const auto m = oracles::oracle_max_disk_depth(l.disks->points);
      if (m.depth >= l.disks->depth_target) a.witness = DiskWitness{m.point, m.depth};
    }
  } else if (l.intervals) {
    if (auto t = oracles::oracle_interval_containment(*l.intervals)) a.witness = TranslationWitness{*t};
  } else if (l.pairs) {
    if (auto w = oracles::oracle_pair_search(l.pairs->n, l.pairs->check)) a.witness = *w;
  }
  a.decision = a.witness.has_value();
  return a;
}

/// The root-level subdivision of the seeded sample, for pictures only.
std::string picture(const Loaded& l, const RqsParams& params, std::uint64_t seed, const std::optional<Witness>& w) {
  Rng rng(seed);
  if (!l.lines.empty()) {
    const auto pick = sample_without_replacement(l.lines.size(), std::min(params.k, l.lines.size()), rng);
    std::vector<geom::ExactLine> sample;
    for (int i : pick) sample.push_back(l.lines[static_cast<std::size_t>(i)]);
    const auto d = arr::triangulate(arr::build_arrangement(sample, arr::enclosing_bbox(l.lines)));
    return io::svg_dcel(d, arr::subproblems_of(d, l.lines));
  }
  if (l.disks) {
    std::vector<curved::UnitDisk> disks;
    for (const auto& c : l.disks->points) disks.push_back({c});
    const auto pick = sample_without_replacement(disks.size(), std::min(params.k, disks.size()), rng);
    std::vector<int> all(disks.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const auto arrangement = curved::build_disk_arrangement(disks, pick, curved::disk_bbox(disks));
    auto cells = curved::monotone_sweep_subdivide(curved::pseudoline_refine(arrangement), false);
    curved::classify_disks_per_cell(cells, disks, all);
    std::vector<geom::ApproxPoint> centers;
    for (int i : pick) centers.push_back(disks[static_cast<std::size_t>(i)].center);
    return io::svg_cells(cells, centers);
  }
  if (l.intervals) {
    std::optional<geom::Rat> t;
    if (w) t = std::get<TranslationWitness>(*w).t;
    return io::svg_intervals(*l.intervals, t);
  }
  if (l.triangle) {
    std::vector<std::vector<geom::ExactPoint>> polys;
    if (w)
      polys.push_back({l.triangle->points[static_cast<std::size_t>(std::get<TriangleWitness>(*w).points[0])],
                       l.triangle->points[static_cast<std::size_t>(std::get<TriangleWitness>(*w).points[1])],
                       l.triangle->points[static_cast<std::size_t>(std::get<TriangleWitness>(*w).points[2])]});
    return io::svg_polygons(polys, std::nullopt);
  }
  if (l.polygon) {
    std::optional<geom::ExactLine> cut;
    if (w) cut = std::get<PairWitness>(*w).line;
    return io::svg_polygons({l.polygon->vertices}, cut);
  }
  if (l.projection) {
    std::optional<geom::ExactLine> axis;
    if (w && std::get<PairWitness>(*w).direction) {
      const auto& d = *std::get<PairWitness>(*w).direction;
      axis = geom::ExactLine(d.y, -d.x, 0);  // through the origin along d
    }
    return io::svg_polygons(l.projection->polygons, axis);
  }
  throw io::InputError("no picture for a bare pair table");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw io::InputError("cannot write " + path);
  f << text;
}

}  // namespace

Outcome run_solve(const SolveOptions& opt) {
  try {
    return run_solve(opt, io::read_document(opt.input));
  } catch (const io::InputError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

Outcome run_solve(const SolveOptions& opt, const json& doc) {
  Outcome o;
  try {
    if (!kProblems.count(opt.problem)) throw io::InputError("unknown problem \"" + opt.problem + "\"");
    if (opt.backend != "rqs" && opt.backend != "bruteforce") throw io::InputError("unknown backend \"" + opt.backend + "\"");
    if (!(opt.epsilon > 0 && opt.epsilon < 1)) throw io::InputError("epsilon must lie in (0, 1)");
    if (!(opt.delta > 0)) throw io::InputError("delta must be positive");
    if (opt.emit_svg && opt.problem == "pair") throw io::InputError("no picture for a bare pair table");
    const Loaded l = load(opt, doc);

    json r;
    r["problem"] = opt.problem;
    r["backend"] = opt.backend;
    const RqsParams params = choose_params(std::max<std::size_t>(l.adapter->size(), 4), opt.epsilon, opt.delta);
    std::optional<Witness> witness;
    if (opt.backend == "bruteforce") {
      const auto a = brute_force(l);
      witness = a.witness;
      r["decision"] = a.decision;
      r["params"] = nullptr;
      r["ledger"] = nullptr;
      r["classical_baseline"] = nullptr;
      r["attempts"] = 1;
      r["retries"] = 0;
      r["exhausted"] = false;
      r["max_depth"] = 0;
    } else {
      const RqsResult res = l.triangle ? problems::solve_triangle(*l.triangle, params, opt.seed)
                                       : rqs_solve(*l.adapter, params, opt.seed);
      witness = res.witness;
      r["decision"] = res.decision;
      r["params"] = io::to_json(params);
      r["ledger"] = io::to_json(res.ledger);
      r["classical_baseline"] = io::to_json(res.classical_baseline);
      r["attempts"] = res.attempts;
      r["retries"] = res.retries;
      r["exhausted"] = res.exhausted;
      r["max_depth"] = res.max_depth;
      if (res.exhausted) o.code = 2;
    }
    r["witness"] = witness ? io::to_json(*witness) : json(nullptr);
    r["verified"] = witness ? json(verify_witness(*l.adapter, *witness)) : json(nullptr);
    if (opt.emit_svg) write_file(*opt.emit_svg, picture(l, params, opt.seed, witness));
    o.out = io::render(r);
  } catch (const io::InputError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return o;
}

Outcome run_experiment(const ExperimentOptions& opt) {
  Outcome o;
  try {
    if (opt.trials && *opt.trials == 0) throw io::InputError("trials must be positive");
    const std::string prefix = opt.out.value_or(opt.experiment);
    std::string json_text, csv_text;
    std::ostringstream summary;
    auto concentration = [&](const exp::ConcentrationReport& rep) {
      json_text = exp::to_json(rep);
      csv_text = exp::to_csv(rep);
      std::size_t worst = 0;
      for (const auto& t : rep.trials) worst = std::max(worst, t.max_crossing);
      summary << rep.experiment << " n=" << rep.n << " k=" << rep.k;
      if (rep.experiment == "conc-grid") summary << " d=" << rep.d;
      summary << " bound=" << exp::fixed12(rep.bound)
              << " max_crossing=" << worst << " violation_fraction=" << exp::fixed12(rep.violation_fraction())
              << (rep.passes() ? " PASS" : " FAIL") << "\n";
    };
    if (opt.experiment == "conc-lines") {
      concentration(exp::concentration_lines(opt.n.value_or(1000), opt.k.value_or(50), opt.delta.value_or(2.0),
                                             opt.epsilon.value_or(0.05), opt.trials.value_or(100), opt.seed));
    } else if (opt.experiment == "conc-disks") {
      concentration(exp::concentration_pseudolines(opt.n.value_or(500), opt.k.value_or(25), opt.epsilon.value_or(0.05),
                                                   opt.trials.value_or(50), opt.seed));
    } else if (opt.experiment == "conc-grid") {
      const std::size_t d = opt.d.value_or(2);
      concentration(exp::concentration_grid_d(opt.n.value_or(d == 2 ? 500 : 200), d, opt.k.value_or(d == 2 ? 40 : 30),
                                              opt.epsilon.value_or(0.05), opt.trials.value_or(100), opt.seed));
    } else if (opt.experiment == "cost-scaling") {
      auto sizes = opt.sizes.empty() ? std::vector<std::size_t>{256, 512, 1024, 2048, 4096} : opt.sizes;
      auto seeds = opt.seeds.empty() ? std::vector<std::uint64_t>{opt.seed} : opt.seeds;
      const auto rep = exp::cost_scaling(opt.family, sizes, seeds, opt.epsilon.value_or(0.1), opt.fixed_k.value_or(0));
      json_text = exp::to_json(rep);
      csv_text = exp::to_csv(rep);
      summary << "cost-scaling " << rep.family << " grover_slope=" << exp::fixed12(rep.grover.slope)
              << " classical_slope=" << exp::fixed12(rep.classical.slope) << "\n";
    } else {
      throw io::InputError("unknown experiment \"" + opt.experiment + "\"");
    }
    write_file(prefix + ".json", json_text);
    write_file(prefix + ".csv", csv_text);
    o.out = summary.str();
  } catch (const io::InputError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return o;
}

}  // namespace rqs::cli
