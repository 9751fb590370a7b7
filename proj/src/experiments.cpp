#include "rqs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rqs/adapters.hpp"
#include "rqs/arrangement.hpp"
#include "rqs/curved.hpp"
#include "rqs/generators.hpp"
#include "rqs/grid.hpp"

namespace rqs::exp {

namespace {

using json = nlohmann::json;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Each trial gets its own stream so trials can be rerun in isolation.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t t) { return seed * 1000003ULL + t + 1; }

void summarize(ConcentrationTrial& trial, const std::vector<std::size_t>& counts, double bound) {
  trial.regions = counts.size();
  trial.max_crossing = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  trial.mean_crossing =
      counts.empty() ? 0.0 : static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0})) / static_cast<double>(counts.size());
  trial.violated = static_cast<double>(trial.max_crossing) > bound;
}

double lines_bound(std::size_t n, std::size_t k, double delta, double epsilon) {
  const double nd = static_cast<double>(n);
  return delta * nd / static_cast<double>(k) * (std::log(nd) + std::log(1.0 / epsilon));
}

/// A quarter arc of a sampled circle continued by its two tangent rays away from the arc,
/// both clipped to the box.
std::vector<curved::ArcOrSeg> pseudoline(int id, const geom::ApproxPoint& c, int qx, int qy, const curved::Rect& box) {
  using curved::ArcOrSeg;
  const double ray_y = qy > 0 ? box.ymin : box.ymax;
  const double ray_x = qx > 0 ? box.xmin : box.xmax;
  return {ArcOrSeg::arc(id, c, qx, c.y, c.y + qy),
          ArcOrSeg::segment(id, {c.x + qx, std::min(c.y, ray_y)}, {c.x + qx, std::max(c.y, ray_y)}),
          ArcOrSeg::segment(id, {std::min(c.x, ray_x), c.y + qy}, {std::max(c.x, ray_x), c.y + qy})};
}

/// Largest number of points shared by two pseudolines of different sampled disks.
std::size_t pairwise_crossings(const std::vector<curved::UnitDisk>& disks, std::span<const int> sample, const curved::Rect& box) {
  std::vector<std::vector<curved::ArcOrSeg>> curves;
  std::vector<int> owner;
  for (int id : sample)
    for (int qx : {-1, 1})
      for (int qy : {-1, 1}) {
        curves.push_back(pseudoline(id, disks[static_cast<std::size_t>(id)].center, qx, qy, box));
        owner.push_back(id);
      }
  std::size_t best = 0;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (owner[i] == owner[j]) continue;
      std::vector<geom::ApproxPoint> pts;
      for (const auto& p : curves[i])
        for (const auto& q : curves[j])
          for (const auto& x : curved::intersections(p, q)) {
            // The pieces of one curve share endpoints; count each point once.
            bool seen = std::any_of(pts.begin(), pts.end(), [&](const geom::ApproxPoint& y) { return geom::distance(x, y) <= 1e-7; });
            if (!seen) pts.push_back(x);
          }
      best = std::max(best, pts.size());
    }
  return best;
}

json trial_json(const ConcentrationTrial& t) {
  return {{"seed", t.seed},
          {"regions", t.regions},
          {"max_crossing", t.max_crossing},
          {"mean_crossing", fixed12(t.mean_crossing)},
          {"violated", t.violated}};
}

json fit_json(const Fit& f) {
  json r = json::array();
  for (double v : f.residuals) r.push_back(fixed12(v));
  return {{"slope", fixed12(f.slope)}, {"intercept", fixed12(f.intercept)}, {"residuals", r}};
}

}  // namespace

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  return s == "-0.000000000000" ? "0.000000000000" : s;
}

double ConcentrationReport::violation_fraction() const {
  if (trials.empty()) return 0.0;
  const auto bad = std::count_if(trials.begin(), trials.end(), [](const ConcentrationTrial& t) { return t.violated; });
  return static_cast<double>(bad) / static_cast<double>(trials.size());
}

ConcentrationReport concentration_lines(std::size_t n, std::size_t k, double delta, double epsilon, std::size_t trials,
                                        std::uint64_t seed) {
  require(trials > 0, "trials must be positive");
  require(k >= 2 && k < n, "need 2 <= k < n");
  require(epsilon > 0 && epsilon < 1 && delta > 0, "need 0 < epsilon < 1 and delta > 0");
  ConcentrationReport rep;
  rep.experiment = "conc-lines";
  rep.n = n;
  rep.k = k;
  rep.d = 2;
  rep.delta = delta;
  rep.epsilon = epsilon;
  rep.bound = lines_bound(n, k, delta, epsilon);
  Rng input(seed);
  const auto lines = gen::random_lines(n, input);
  const auto box = arr::enclosing_bbox(lines);
  for (std::size_t t = 0; t < trials; ++t) {
    ConcentrationTrial trial;
    trial.seed = trial_seed(seed, t);
    Rng rng(trial.seed);
    auto sample = sample_without_replacement(n, k, rng);
    std::vector<char> sampled(n, 0);
    std::vector<geom::ExactLine> chosen;
    for (int id : sample) {
      sampled[static_cast<std::size_t>(id)] = 1;
      chosen.push_back(lines[static_cast<std::size_t>(id)]);
    }
    const auto dcel = arr::triangulate(arr::build_arrangement(chosen, box));
    std::vector<std::size_t> counts;
    for (const auto& spec : arr::subproblems_of(dcel, lines))
      counts.push_back(static_cast<std::size_t>(
          std::count_if(spec.objects.begin(), spec.objects.end(), [&](int o) { return !sampled[static_cast<std::size_t>(o)]; })));
    summarize(trial, counts, rep.bound);
    rep.trials.push_back(trial);
  }
  return rep;
}

double violation_fraction_at(const ConcentrationReport& report, double delta) {
  if (report.trials.empty()) return 0.0;
  const double bound = lines_bound(report.n, report.k, delta, report.epsilon);
  const auto bad = std::count_if(report.trials.begin(), report.trials.end(),
                                 [&](const ConcentrationTrial& t) { return static_cast<double>(t.max_crossing) > bound; });
  return static_cast<double>(bad) / static_cast<double>(report.trials.size());
}

ConcentrationReport concentration_pseudolines(std::size_t n, std::size_t k, double epsilon, std::size_t trials,
                                              std::uint64_t seed, double side, double crossing_cap) {
  Rng input(seed);
  return concentration_pseudolines(gen::disk_centers(n, side, input), k, epsilon, trials, seed, crossing_cap);
}

ConcentrationReport concentration_pseudolines(const std::vector<geom::ApproxPoint>& centers, std::size_t k, double epsilon,
                                              std::size_t trials, std::uint64_t seed, double crossing_cap) {
  const std::size_t n = centers.size();
  require(trials > 0, "trials must be positive");
  require(k >= 1 && k < n, "need 1 <= k < n");
  require(epsilon > 0 && epsilon < 1, "need 0 < epsilon < 1");
  ConcentrationReport rep;
  rep.experiment = "conc-disks";
  rep.n = n;
  rep.k = k;
  rep.epsilon = epsilon;
  rep.crossing_constant = crossing_cap;
  const double cn = crossing_cap * static_cast<double>(n);
  rep.bound = cn / static_cast<double>(k) * (5 * std::log(cn) + std::log(1.0 / epsilon));
  std::vector<curved::UnitDisk> disks;
  for (const auto& c : centers) disks.push_back({c});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (geom::distance(disks[i].center, disks[j].center) <= geom::kTolerance)
        throw std::invalid_argument("coincident centers");
  const auto box = curved::disk_bbox(disks);
  for (std::size_t t = 0; t < trials; ++t) {
    ConcentrationTrial trial;
    trial.seed = trial_seed(seed, t);
    Rng rng(trial.seed);
    std::vector<int> sample;
    for (;;) {
      sample = sample_without_replacement(n, k, rng);
      bool clean = true;
      for (std::size_t i = 0; i < sample.size() && clean; ++i)
        for (std::size_t j = i + 1; j < sample.size() && clean; ++j)
          clean = !curved::near_degenerate(disks[static_cast<std::size_t>(sample[i])], disks[static_cast<std::size_t>(sample[j])]);
      if (clean) break;
    }
    std::vector<char> sampled(n, 0);
    for (int id : sample) sampled[static_cast<std::size_t>(id)] = 1;
    std::vector<int> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (!sampled[i]) rest.push_back(static_cast<int>(i));
    const auto arrangement = curved::build_disk_arrangement(disks, sample, box);
    const auto pieces = curved::pseudoline_refine(arrangement);
    rep.measured_constant = std::max(rep.measured_constant, static_cast<double>(pairwise_crossings(disks, sample, box)));
    auto cells = curved::monotone_sweep_subdivide(pieces, false);
    curved::classify_disks_per_cell(cells, disks, rest);
    std::vector<std::size_t> counts;
    for (const auto& c : cells) counts.push_back(c.crossing.size());
    summarize(trial, counts, rep.bound);
    rep.trials.push_back(trial);
  }
  return rep;
}

ConcentrationReport concentration_grid_d(std::size_t n, std::size_t d, std::size_t k, double epsilon, std::size_t trials,
                                         std::uint64_t seed) {
  require(trials > 0, "trials must be positive");
  require(d == 2 || d == 3, "grid dimension must be 2 or 3");
  require(k >= 1 && k <= n, "need 1 <= k <= n");
  require(epsilon > 0 && epsilon < 1, "need 0 < epsilon < 1");
  ConcentrationReport rep;
  rep.experiment = "conc-grid";
  rep.n = n;
  rep.k = k;
  rep.d = d;
  rep.delta = 0.0;
  rep.epsilon = epsilon;
  const double nd = static_cast<double>(n);
  rep.bound = 2.0 * static_cast<double>(d * d) * nd / static_cast<double>(k) * (5 * std::log(nd) + std::log(1.0 / epsilon));
  Rng input(seed);
  std::vector<std::set<geom::Rat>> coords(d);
  std::uniform_int_distribution<std::size_t> axis(0, d - 1);
  for (std::size_t placed = 0; placed < n;) {
    if (coords[axis(input)].insert(gen::random_rational(input)).second) ++placed;
  }
  std::vector<std::vector<geom::Rat>> axes;
  for (const auto& c : coords) axes.emplace_back(c.begin(), c.end());
  const grid::GridArrangement grid(std::move(axes));
  for (std::size_t t = 0; t < trials; ++t) {
    ConcentrationTrial trial;
    trial.seed = trial_seed(seed, t);
    Rng rng(trial.seed);
    auto sample = sample_without_replacement(n, k, rng);
    std::vector<std::size_t> counts;
    for (const auto& cell : grid::grid_cells(grid, sample)) counts.push_back(cell.crossing.size());
    summarize(trial, counts, rep.bound);
    rep.trials.push_back(trial);
  }
  return rep;
}

Fit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "fit needs at least two points");
  const std::size_t m = x.size();
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    require(x[i] > 0 && y[i] > 0, "fit needs positive values");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(m);
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(m);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  require(sxx > 0, "fit needs at least two distinct sizes");
  Fit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < m; ++i) f.residuals.push_back(ly[i] - (f.intercept + f.slope * lx[i]));
  return f;
}

ScalingReport cost_scaling(const std::string& family, const std::vector<std::size_t>& sizes,
                           const std::vector<std::uint64_t>& seeds, double epsilon, std::size_t fixed_k) {
  require(family == "p3l" || family == "pair-const" || family == "pair-linear", "unknown scaling family");
  require(std::set<std::size_t>(sizes.begin(), sizes.end()).size() >= 3, "cost scaling needs at least three distinct sizes");
  require(!seeds.empty(), "cost scaling needs at least one seed");
  require(std::all_of(sizes.begin(), sizes.end(), [](std::size_t n) { return n >= 4; }), "sizes must be at least 4");
  ScalingReport rep;
  rep.family = family;
  rep.epsilon = epsilon;
  std::vector<double> xs, grover, classical;
  for (std::size_t n : sizes)
    for (std::uint64_t seed : seeds) {
      std::unique_ptr<ProblemAdapter> adapter;
      if (family == "p3l") {
        Rng rng(seed * 7919 + n);
        adapter = problems::p3l_adapter(gen::random_lines(n, rng));
      } else {
        const std::uint64_t unit = family == "pair-const" ? 1 : n;
        problems::PairSearchInstance inst;
        inst.n = n;
        inst.beta = family == "pair-const" ? 0.0 : 1.0;
        inst.check = [unit](int, int, QueryLedger& cost) -> std::optional<PairWitness> {
          cost.classical_ops += unit;
          return std::nullopt;
        };
        adapter = problems::pair_adapter(std::move(inst));
      }
      const auto params = fixed_k ? fixed_sample_params(adapter->size(), fixed_k, epsilon) : choose_params(adapter->size(), epsilon);
      const auto r = rqs_solve(*adapter, params, seed);
      ScalingPoint p;
      p.n = n;
      p.seed = seed;
      p.grover_cost = r.ledger.total();
      p.classical_cost = r.classical_baseline.total();
      p.decision = r.decision;
      p.exhausted = r.exhausted;
      p.depth = r.max_depth;
      p.k = params.k;
      rep.points.push_back(p);
      if (r.exhausted) continue;
      xs.push_back(static_cast<double>(n));
      grover.push_back(static_cast<double>(p.grover_cost));
      classical.push_back(static_cast<double>(p.classical_cost));
    }
  rep.grover = fit_loglog(xs, grover);
  rep.classical = fit_loglog(xs, classical);
  return rep;
}

std::string to_json(const ConcentrationReport& r) {
  json trials = json::array();
  for (const auto& t : r.trials) trials.push_back(trial_json(t));
  json j = {{"experiment", r.experiment},
            {"n", r.n},
            {"k", r.k},
            {"epsilon", fixed12(r.epsilon)},
            {"bound", fixed12(r.bound)},
            {"violation_fraction", fixed12(r.violation_fraction())},
            {"passes", r.passes()},
            {"trials", trials}};
  if (r.experiment == "conc-lines") {
    j["delta"] = fixed12(r.delta);
    json sweep = json::object();
    for (double d : {1.0, 2.0, 4.0}) sweep[fixed12(d)] = fixed12(violation_fraction_at(r, d));
    j["delta_sweep"] = sweep;
  }
  if (r.experiment == "conc-disks") {
    j["crossing_constant"] = fixed12(r.crossing_constant);
    j["measured_constant"] = fixed12(r.measured_constant);
  }
  if (r.experiment == "conc-grid") j["d"] = r.d;
  return j.dump(2) + "\n";
}

std::string to_csv(const ConcentrationReport& r) {
  std::ostringstream out;
  out << "trial,seed,regions,max_crossing,mean_crossing,bound,violated\n";
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    out << i << ',' << t.seed << ',' << t.regions << ',' << t.max_crossing << ',' << fixed12(t.mean_crossing) << ','
        << fixed12(r.bound) << ',' << (t.violated ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string to_json(const ScalingReport& r) {
  json points = json::array();
  for (const auto& p : r.points)
    points.push_back({{"n", p.n},
                      {"seed", p.seed},
                      {"k", p.k},
                      {"grover_cost", p.grover_cost},
                      {"classical_cost", p.classical_cost},
                      {"decision", p.decision},
                      {"exhausted", p.exhausted},
                      {"depth", p.depth}});
  json j = {{"experiment", "cost-scaling"},
            {"family", r.family},
            {"epsilon", fixed12(r.epsilon)},
            {"points", points},
            {"grover", fit_json(r.grover)},
            {"classical", fit_json(r.classical)}};
  return j.dump(2) + "\n";
}

std::string to_csv(const ScalingReport& r) {
  std::ostringstream out;
  out << "n,seed,k,grover_cost,classical_cost,decision,exhausted,depth\n";
  for (const auto& p : r.points)
    out << p.n << ',' << p.seed << ',' << p.k << ',' << p.grover_cost << ',' << p.classical_cost << ',' << (p.decision ? 1 : 0)
        << ',' << (p.exhausted ? 1 : 0) << ',' << p.depth << '\n';
  return out.str();
}

}  // namespace rqs::exp
