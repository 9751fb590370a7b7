#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rqs/adapters.hpp"
#include "rqs/grid.hpp"

namespace rqs::problems {

namespace {

/// Two axes of candidate coordinates; every vertex (x_i, y_j) encodes one candidate solution.
struct GridData {
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  std::function<std::optional<Witness>(std::size_t i, std::size_t j, QueryLedger& cost)> probe;
  std::function<bool(const Witness&)> verify;
};

class GridDecomposition : public Decomposition {
 public:
  std::vector<grid::GridCell> cells;
  std::vector<std::size_t> sample_x, sample_y;  // sampled indices per axis, relative to the view
};

class GridPairAdapter : public ProblemAdapter {
 public:
  GridPairAdapter(std::shared_ptr<const GridData> data, std::size_t x0, std::size_t x1, std::size_t y0, std::size_t y1)
      : data_(std::move(data)), x0_(x0), x1_(x1), y0_(y0), y1_(y1) {}

  std::size_t size() const override { return (x1_ - x0_) + (y1_ - y0_); }

  std::optional<bool> trivial() const override {
    if (x0_ == x1_ || y0_ == y1_) return false;
    return std::nullopt;
  }

  std::unique_ptr<Decomposition> decompose(std::size_t k, Rng& rng) const override {
    auto dec = std::make_unique<GridDecomposition>();
    std::vector<int> sample = sample_without_replacement(size(), k, rng);
    std::sort(sample.begin(), sample.end());
    grid::GridArrangement g(axes());
    dec->cells = grid::grid_cells(g, sample);
    const std::size_t nx = x1_ - x0_;
    for (std::size_t c = 0; c < dec->cells.size(); ++c) {
      const auto& r = dec->cells[c].range;
      SubproblemSpec s;
      s.region = static_cast<int>(c);
      for (std::size_t i = r[0].first; i < r[0].second; ++i) s.objects.push_back(static_cast<int>(i));
      for (std::size_t j = r[1].first; j < r[1].second; ++j) s.objects.push_back(static_cast<int>(nx + j));
      dec->subproblems.push_back(std::move(s));
    }
    for (int id : sample) {
      if (static_cast<std::size_t>(id) < nx) dec->sample_x.push_back(static_cast<std::size_t>(id));
      else dec->sample_y.push_back(static_cast<std::size_t>(id) - nx);
    }
    return dec;
  }

  // Only vertices of the sampled grid; solutions inside an edge are left to the regions.
  std::optional<Witness> span_check(const Decomposition& base, QueryLedger& ledger) const override {
    const auto& dec = static_cast<const GridDecomposition&>(base);
    for (std::size_t i : dec.sample_x)
      for (std::size_t j : dec.sample_y)
        if (auto w = data_->probe(x0_ + i, y0_ + j, ledger)) return w;
    return std::nullopt;
  }

  std::optional<Witness> base_solve(QueryLedger& ledger) const override {
    for (std::size_t i = x0_; i < x1_; ++i)
      for (std::size_t j = y0_; j < y1_; ++j)
        if (auto w = data_->probe(i, j, ledger)) return w;
    return std::nullopt;
  }

  std::unique_ptr<ProblemAdapter> restrict(const Decomposition& base, const SubproblemSpec& spec) const override {
    const auto& dec = static_cast<const GridDecomposition&>(base);
    const auto& r = dec.cells[static_cast<std::size_t>(spec.region)].range;
    return std::make_unique<GridPairAdapter>(data_, x0_ + r[0].first, x0_ + r[0].second, y0_ + r[1].first,
                                             y0_ + r[1].second);
  }

  bool verify(const Witness& w) const override { return data_->verify(w); }

 private:
  std::vector<std::vector<Rat>> axes() const {
    return {std::vector<Rat>(data_->xs.begin() + static_cast<std::ptrdiff_t>(x0_), data_->xs.begin() + static_cast<std::ptrdiff_t>(x1_)),
            std::vector<Rat>(data_->ys.begin() + static_cast<std::ptrdiff_t>(y0_), data_->ys.begin() + static_cast<std::ptrdiff_t>(y1_))};
  }

  std::shared_ptr<const GridData> data_;
  std::size_t x0_, x1_, y0_, y1_;
};

std::vector<Rat> endpoints(const std::vector<Interval>& set) {
  std::vector<Rat> out;
  for (const auto& iv : set) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::unique_ptr<ProblemAdapter> interval_adapter(IntervalInstance inst) {
  inst.validate();
  if (inst.P.empty()) throw std::invalid_argument("P must hold at least one interval");
  auto data = std::make_shared<GridData>();
  data->xs = endpoints(inst.Q);
  data->ys = endpoints(inst.P);
  auto shared = std::make_shared<const IntervalInstance>(std::move(inst));
  const GridData* raw = data.get();
  data->probe = [shared, raw](std::size_t i, std::size_t j, QueryLedger& cost) -> std::optional<Witness> {
    cost.classical_ops += shared->P.size() + shared->Q.size();
    Rat t = raw->xs[i] - raw->ys[j];
    if (check_translation(*shared, t)) return TranslationWitness{t};
    return std::nullopt;
  };
  data->verify = [shared](const Witness& w) {
    const auto* t = std::get_if<TranslationWitness>(&w);
    return t && check_translation(*shared, t->t);
  };
  const std::size_t nx = data->xs.size(), ny = data->ys.size();
  return std::make_unique<GridPairAdapter>(std::move(data), 0, nx, 0, ny);
}

std::unique_ptr<ProblemAdapter> pair_adapter(PairSearchInstance inst) {
  if (inst.n < 2) throw std::invalid_argument("pair search needs n >= 2");
  if (!inst.check) throw std::invalid_argument("pair search needs a check");
  auto data = std::make_shared<GridData>();
  for (std::size_t i = 0; i < inst.n; ++i) {
    data->xs.emplace_back(static_cast<long>(i));
    data->ys.emplace_back(static_cast<long>(i));
  }
  auto shared = std::make_shared<const PairSearchInstance>(std::move(inst));
  data->probe = [shared](std::size_t i, std::size_t j, QueryLedger& cost) -> std::optional<Witness> {
    if (i == j) return std::nullopt;
    auto w = shared->check(static_cast<int>(i), static_cast<int>(j), cost);
    if (!w) return std::nullopt;
    w->i = static_cast<int>(i);
    w->j = static_cast<int>(j);
    return *w;
  };
  data->verify = [shared](const Witness& w) {
    const auto* p = std::get_if<PairWitness>(&w);
    if (!p || p->i == p->j || p->i < 0 || p->j < 0) return false;
    if (static_cast<std::size_t>(p->i) >= shared->n || static_cast<std::size_t>(p->j) >= shared->n) return false;
    if (shared->accept) return shared->accept(*p);
    QueryLedger scratch;
    return shared->check(p->i, p->j, scratch).has_value();
  };
  const std::size_t n = data->xs.size();
  return std::make_unique<GridPairAdapter>(std::move(data), 0, n, 0, n);
}

PairSearchInstance polygon_cut_pairs(PolygonInstance poly) {
  poly.validate();
  auto shared = std::make_shared<const PolygonInstance>(std::move(poly));
  PairSearchInstance inst;
  inst.n = shared->vertices.size();
  inst.beta = 1.0;
  inst.check = [shared](int u, int v, QueryLedger& cost) -> std::optional<PairWitness> {
    cost.classical_ops += shared->vertices.size();
    auto line = polygon_cut_check(*shared, u, v);
    if (!line) return std::nullopt;
    return PairWitness{u, v, *line, std::nullopt};
  };
  inst.accept = [shared](const PairWitness& w) { return w.line && is_cut_witness(*shared, *w.line); };
  return inst;
}

PairSearchInstance disjoint_projection_pairs(ProjectionInstance proj) {
  proj.validate();
  auto shared = std::make_shared<const ProjectionInstance>(std::move(proj));
  std::size_t total = 0;
  for (const auto& p : shared->polygons) total += p.size();
  PairSearchInstance inst;
  inst.n = shared->polygons.size();
  inst.beta = 1.0;
  inst.check = [shared, total](int i, int j, QueryLedger& cost) -> std::optional<PairWitness> {
    cost.classical_ops += total;
    auto d = disjoint_projection_check(*shared, i, j);
    if (!d) return std::nullopt;
    return PairWitness{i, j, std::nullopt, *d};
  };
  inst.accept = [shared](const PairWitness& w) { return w.direction && projections_disjoint(*shared, *w.direction); };
  return inst;
}

}  // namespace rqs::problems
