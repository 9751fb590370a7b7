#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rqs/adapters.hpp"

namespace rqs::problems {

namespace {

using arr::Box;
using arr::Dcel;
using geom::line_intersection;

std::uint64_t log2ceil(std::size_t m) {
  std::uint64_t r = 0;
  while ((std::size_t{1} << r) < m) ++r;
  return std::max<std::uint64_t>(r, 1);
}

/// A point of `carrier` lying on three or more of `lines`, restricted to the closed segment
/// [from, to] when given. Lines equal to the carrier contain every point of it.
std::optional<PointWitness> concurrence_on(const ExactLine& carrier, std::span<const ExactLine> lines,
                                           std::span<const int> candidates, const ExactPoint* from,
                                           const ExactPoint* to, QueryLedger& cost) {
  // Crossings are keyed by one coordinate: x, or y on a vertical carrier.
  const bool vertical = carrier.is_vertical();
  auto key = [&](const ExactPoint& p) -> const Rat& { return vertical ? p.y : p.x; };
  std::vector<int> on;
  std::vector<std::pair<Rat, int>> hits;
  std::optional<Rat> lo, hi;
  if (from) {
    lo = key(*from);
    hi = key(*to);
    if (*hi < *lo) std::swap(*lo, *hi);
  }
  const Rat &a1 = carrier.a(), &b1 = carrier.b(), &c1 = carrier.c();
  Rat det, t;
  for (int id : candidates) {
    const auto& l = lines[static_cast<std::size_t>(id)];
    if (l == carrier) {
      on.push_back(id);
      continue;
    }
    det = a1 * l.b() - l.a() * b1;
    if (sgn(det) == 0) continue;
    t = vertical ? Rat((a1 * l.c() - l.a() * c1) / det) : Rat((c1 * l.b() - l.c() * b1) / det);
    if (lo && (t < *lo || t > *hi)) continue;
    hits.emplace_back(t, id);
  }
  cost.classical_ops += candidates.size() * log2ceil(candidates.size());
  std::sort(hits.begin(), hits.end());
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j].first == hits[i].first) ++j;
    if (j - i + on.size() >= 3) {
      PointWitness w{*line_intersection(carrier, lines[static_cast<std::size_t>(hits[i].second)]), on};
      for (std::size_t t = i; t < j; ++t) w.lines.push_back(hits[t].second);
      std::sort(w.lines.begin(), w.lines.end());
      return w;
    }
    i = j;
  }
  return std::nullopt;
}

/// Exhaustive concurrence test: per line, its crossings sorted along it.
std::optional<PointWitness> concurrence_exhaustive(std::span<const ExactLine> lines, QueryLedger& cost) {
  std::vector<int> all(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) all[i] = static_cast<int>(i);
  for (std::size_t i = 0; i + 2 < lines.size(); ++i) {
    std::span<const int> rest(all.data() + i, all.size() - i);
    if (auto w = concurrence_on(lines[i], lines, rest, nullptr, nullptr, cost)) return w;
  }
  return std::nullopt;
}

/// Triangulated arrangement of sampled lines over a box containing every crossing of the view.
class LinesDecomposition : public Decomposition {
 public:
  Box box;
  Dcel dcel;
  std::vector<int> sample;
  std::map<int, std::size_t> spec_of_face;
  std::optional<Dcel> full;  // arrangement of every line of the view, for zones
};

std::unique_ptr<LinesDecomposition> decompose_lines(std::span<const ExactLine> lines, std::size_t k, Rng& rng) {
  auto dec = std::make_unique<LinesDecomposition>();
  dec->sample = sample_without_replacement(lines.size(), k, rng);
  std::sort(dec->sample.begin(), dec->sample.end());
  std::vector<ExactLine> chosen;
  for (int id : dec->sample) chosen.push_back(lines[static_cast<std::size_t>(id)]);
  dec->box = arr::enclosing_bbox(lines);
  dec->dcel = arr::triangulate(arr::build_arrangement(chosen, dec->box));
  dec->subproblems = arr::subproblems_of(dec->dcel, lines);
  for (std::size_t i = 0; i < dec->subproblems.size(); ++i) dec->spec_of_face[dec->subproblems[i].region] = i;
  return dec;
}

/// Support lines of the triangulation, each once.
std::vector<ExactLine> support_lines(const Dcel& d) {
  std::vector<ExactLine> out;
  for (std::size_t h = 0; h < d.half_edges().size(); ++h) {
    const auto& he = d.half_edges()[h];
    if (he.carrier != arr::kSupport || he.twin < static_cast<int>(h)) continue;
    ExactLine l = ExactLine::through(d.vertices()[static_cast<std::size_t>(he.origin)],
                                     d.vertices()[static_cast<std::size_t>(d.dest(static_cast<int>(h)))]);
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
  }
  return out;
}

std::vector<ExactLine> gather(const std::vector<ExactLine>& all, std::span<const int> ids) {
  std::vector<ExactLine> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(all[static_cast<std::size_t>(id)]);
  return out;
}

std::vector<int> to_global(std::span<const int> ids, std::span<const int> local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int i : local) out.push_back(ids[static_cast<std::size_t>(i)]);
  return out;
}

// ---------------------------------------------------------------------------
// Point on three lines

class P3lAdapter : public ProblemAdapter {
 public:
  P3lAdapter(std::shared_ptr<const std::vector<ExactLine>> all, std::vector<int> ids)
      : all_(std::move(all)), ids_(std::move(ids)), lines_(gather(*all_, ids_)) {}

  std::size_t size() const override { return ids_.size(); }

  std::optional<bool> trivial() const override {
    if (ids_.size() < 3) return false;
    return std::nullopt;
  }

  std::unique_ptr<Decomposition> decompose(std::size_t k, Rng& rng) const override {
    return decompose_lines(lines_, k, rng);
  }

  std::optional<Witness> span_check(const Decomposition& base, QueryLedger& ledger) const override {
    const auto& dec = static_cast<const LinesDecomposition&>(base);
    std::vector<int> everyone(lines_.size());
    for (std::size_t i = 0; i < lines_.size(); ++i) everyone[i] = static_cast<int>(i);
    // Vertices of the triangulation and edges on sampled lines.
    for (int s : dec.sample)
      if (auto w = concurrence_on(lines_[static_cast<std::size_t>(s)], lines_, everyone, nullptr, nullptr, ledger))
        return globalize(*w);
    // Support edges: any line through a point of the edge crosses the adjacent face.
    const auto& d = dec.dcel;
    for (std::size_t h = 0; h < d.half_edges().size(); ++h) {
      const auto& he = d.half_edges()[h];
      if (he.carrier != arr::kSupport || he.twin < static_cast<int>(h)) continue;
      auto it = dec.spec_of_face.find(he.face);
      if (it == dec.spec_of_face.end()) continue;
      const auto& p = d.vertices()[static_cast<std::size_t>(he.origin)];
      const auto& q = d.vertices()[static_cast<std::size_t>(d.dest(static_cast<int>(h)))];
      const auto& objects = dec.subproblems[it->second].objects;
      if (auto w = concurrence_on(ExactLine::through(p, q), lines_, objects, &p, &q, ledger)) return globalize(*w);
    }
    return std::nullopt;
  }

  std::optional<Witness> base_solve(QueryLedger& ledger) const override {
    if (auto w = concurrence_exhaustive(lines_, ledger)) return globalize(*w);
    return std::nullopt;
  }

  std::unique_ptr<ProblemAdapter> restrict(const Decomposition&, const SubproblemSpec& spec) const override {
    return std::make_unique<P3lAdapter>(all_, to_global(ids_, spec.objects));
  }

  bool verify(const Witness& w) const override {
    const auto* p = std::get_if<PointWitness>(&w);
    if (!p) return false;
    std::set<int> distinct(p->lines.begin(), p->lines.end());
    if (distinct.size() < 3 || distinct.size() != p->lines.size()) return false;
    for (int id : distinct) {
      if (id < 0 || static_cast<std::size_t>(id) >= all_->size()) return false;
      if ((*all_)[static_cast<std::size_t>(id)].side(p->point) != 0) return false;
    }
    return true;
  }

 private:
  Witness globalize(PointWitness w) const {
    w.lines = to_global(ids_, w.lines);
    std::sort(w.lines.begin(), w.lines.end());
    return w;
  }

  std::shared_ptr<const std::vector<ExactLine>> all_;
  std::vector<int> ids_;
  std::vector<ExactLine> lines_;
};

// ---------------------------------------------------------------------------
// Minimum-area triangle

struct TriangleData {
  TriangleInstance inst;
  std::vector<ExactLine> duals;
};

class TriangleAdapter : public ProblemAdapter {
 public:
  TriangleAdapter(std::shared_ptr<const TriangleData> data, std::vector<int> ids)
      : data_(std::move(data)), ids_(std::move(ids)), duals_(gather(data_->duals, ids_)) {}

  std::size_t size() const override { return ids_.size(); }

  std::optional<bool> trivial() const override {
    if (ids_.size() < 3) return false;
    return std::nullopt;
  }

  std::unique_ptr<Decomposition> decompose(std::size_t k, Rng& rng) const override {
    auto dec = decompose_lines(duals_, k, rng);
    dec->full = arr::build_arrangement(duals_, dec->box);
    return dec;
  }

  std::optional<Witness> span_check(const Decomposition& base, QueryLedger& ledger) const override {
    const auto& dec = static_cast<const LinesDecomposition&>(base);
    std::vector<int> everyone(duals_.size());
    for (std::size_t i = 0; i < duals_.size(); ++i) everyone[i] = static_cast<int>(i);
    // Concurrent dual lines on a sampled line are collinear points.
    for (int s : dec.sample) {
      if (auto w = concurrence_on(duals_[static_cast<std::size_t>(s)], duals_, everyone, nullptr, nullptr, ledger)) {
        std::array<int, 3> t{w->lines[0], w->lines[1], w->lines[2]};
        return make_witness(t);
      }
    }
    for (const auto& support : support_lines(dec.dcel)) {
      // Charged at the size of the zone: the full arrangement only speeds up its extraction.
      arr::Zone zone = arr::zone_in_arrangement(*dec.full, support);
      std::uint64_t work = 0;
      for (const auto& f : zone.faces) work += f.vertices.size();
      ledger.classical_ops += work * log2ceil(duals_.size());
      for (const auto& c : zone_vertical_pairs(duals_, zone, support)) {
        std::array<int, 3> t{c.a, c.b, c.c};
        if (area2_of(t) <= data_->inst.area_bound2) return make_witness(t);
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> base_solve(QueryLedger& ledger) const override {
    const std::size_t s = ids_.size();
    ledger.classical_ops += s * s * s / 6 + 1;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        for (std::size_t l = j + 1; l < s; ++l) {
          std::array<int, 3> t{static_cast<int>(i), static_cast<int>(j), static_cast<int>(l)};
          if (area2_of(t) <= data_->inst.area_bound2) return make_witness(t);
        }
    return std::nullopt;
  }

  std::unique_ptr<ProblemAdapter> restrict(const Decomposition&, const SubproblemSpec& spec) const override {
    return std::make_unique<TriangleAdapter>(data_, to_global(ids_, spec.objects));
  }

  bool verify(const Witness& w) const override {
    const auto* t = std::get_if<TriangleWitness>(&w);
    if (!t) return false;
    const auto& pts = data_->inst.points;
    for (int id : t->points)
      if (id < 0 || static_cast<std::size_t>(id) >= pts.size()) return false;
    if (t->points[0] == t->points[1] || t->points[1] == t->points[2] || t->points[0] == t->points[2]) return false;
    Rat a2 = geom::triangle_area2(pts[static_cast<std::size_t>(t->points[0])], pts[static_cast<std::size_t>(t->points[1])],
                                  pts[static_cast<std::size_t>(t->points[2])]);
    return a2 == t->area2 && a2 <= data_->inst.area_bound2;
  }

 private:
  const ExactPoint& point(int local) const {
    return data_->inst.points[static_cast<std::size_t>(ids_[static_cast<std::size_t>(local)])];
  }
  Rat area2_of(const std::array<int, 3>& t) const { return geom::triangle_area2(point(t[0]), point(t[1]), point(t[2])); }
  Witness make_witness(std::array<int, 3> t) const {
    TriangleWitness w{{}, area2_of(t)};
    for (int i = 0; i < 3; ++i) w.points[static_cast<std::size_t>(i)] = ids_[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
    std::sort(w.points.begin(), w.points.end());
    return w;
  }

  std::shared_ptr<const TriangleData> data_;
  std::vector<int> ids_;
  std::vector<ExactLine> duals_;
};

std::vector<int> iota_ids(std::size_t n) {
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
  return ids;
}

/// Polygon edge joining two adjacent vertex indices of a convex face.
int edge_between(std::size_t u, std::size_t v, std::size_t n) {
  if ((u + 1) % n == v) return static_cast<int>(u);
  if ((v + 1) % n == u) return static_cast<int>(v);
  return -1;
}

}  // namespace

std::unique_ptr<ProblemAdapter> p3l_adapter(std::vector<ExactLine> lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j]) throw std::invalid_argument("duplicate lines");
  auto ids = iota_ids(lines.size());
  return std::make_unique<P3lAdapter>(std::make_shared<const std::vector<ExactLine>>(std::move(lines)), std::move(ids));
}

std::unique_ptr<ProblemAdapter> triangle_adapter(TriangleInstance inst) {
  inst.validate();
  auto data = std::make_shared<TriangleData>();
  for (const auto& p : inst.points) data->duals.push_back(geom::dual_of_point(p));
  data->inst = std::move(inst);
  auto ids = iota_ids(data->duals.size());
  return std::make_unique<TriangleAdapter>(std::move(data), std::move(ids));
}

std::vector<VerticalPair> zone_vertical_pairs(std::span<const ExactLine> lines, const arr::Zone& zone,
                                              const ExactLine& support) {
  std::vector<VerticalPair> out;
  for (const auto& face : zone.faces) {
    const auto& v = face.vertices;
    const std::size_t n = v.size();
    if (n < 3) continue;
    const auto env = arr::face_envelopes(v);
    auto try_chain = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
      for (std::size_t idx : from) {
        const int ca = face.carriers[(idx + n - 1) % n];
        const int cb = face.carriers[idx];
        if (ca < 0 || cb < 0 || ca == cb) continue;
        const ExactPoint& p = v[idx];
        // First vertex of the opposite chain at or right of p.x.
        auto it = std::lower_bound(to.begin(), to.end(), p.x, [&](std::size_t i, const Rat& x) { return v[i].x < x; });
        if (it == to.end()) continue;
        std::vector<int> edges;
        if (v[*it].x == p.x) {
          if (it != to.begin()) edges.push_back(edge_between(*(it - 1), *it, n));
          if (it + 1 != to.end()) edges.push_back(edge_between(*it, *(it + 1), n));
        } else if (it != to.begin()) {
          edges.push_back(edge_between(*(it - 1), *it, n));
        }
        for (int e : edges) {
          if (e < 0) continue;
          const int cc = face.carriers[static_cast<std::size_t>(e)];
          if (cc < 0 || cc == ca || cc == cb) continue;
          const auto& line = lines[static_cast<std::size_t>(cc)];
          ExactPoint q{p.x, line.y_at(p.x)};
          if (support.side(p) * support.side(q) > 0) continue;
          Rat dist = q.y - p.y;
          if (sgn(dist) < 0) dist = -dist;
          out.push_back({p, std::min(ca, cb), std::max(ca, cb), cc, dist});
        }
      }
    };
    try_chain(env.upper, env.lower);
    try_chain(env.lower, env.upper);
  }
  return out;
}

std::optional<VerticalPair> zone_min_vertical_pair(std::span<const ExactLine> lines, const arr::Zone& zone,
                                                   const ExactLine& support) {
  auto all = zone_vertical_pairs(lines, zone, support);
  if (all.empty()) return std::nullopt;
  return *std::min_element(all.begin(), all.end(), [](const VerticalPair& x, const VerticalPair& y) {
    if (x.distance != y.distance) return x.distance < y.distance;
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
}

RqsResult solve_triangle(const TriangleInstance& inst, const RqsParams& params, std::uint64_t seed) {
  inst.validate();
  const std::size_t n = inst.points.size();
  RqsResult out;
  if (n < 3) {
    out.attempts = 1;
    return out;
  }
  // Three points on a vertical line: their duals are parallel, so the dual search cannot see them.
  std::vector<int> order = iota_ids(n);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return inst.points[static_cast<std::size_t>(i)] < inst.points[static_cast<std::size_t>(j)];
  });
  out.ledger.classical_ops += n * log2ceil(n);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const auto& x = inst.points[static_cast<std::size_t>(order[i])].x;
    if (inst.points[static_cast<std::size_t>(order[i + 2])].x == x) {
      std::array<int, 3> t{order[i], order[i + 1], order[i + 2]};
      std::sort(t.begin(), t.end());
      out.decision = true;
      out.witness = TriangleWitness{t, 0};
      out.attempts = 1;
      out.classical_baseline = out.ledger;
      return out;
    }
  }
  std::vector<ExactLine> duals;
  for (const auto& p : inst.points) duals.push_back(geom::dual_of_point(p));
  auto screen = rqs_solve(*p3l_adapter(std::move(duals)), params, seed);
  screen.ledger += out.ledger;
  screen.classical_baseline += out.ledger;
  if (screen.exhausted || (screen.decision && sgn(inst.area_bound2) >= 0)) {
    if (screen.decision) {
      const auto& lines = std::get<PointWitness>(*screen.witness).lines;
      screen.witness = TriangleWitness{{lines[0], lines[1], lines[2]}, 0};
    }
    return screen;
  }
  auto main = rqs_solve(*triangle_adapter(inst), params, seed + 1);
  main.ledger += screen.ledger;
  main.classical_baseline += screen.classical_baseline;
  main.attempts += screen.attempts;
  main.retries += screen.retries;
  main.oversize_errors += screen.oversize_errors;
  main.redraws += screen.redraws;
  main.max_depth = std::max(main.max_depth, screen.max_depth);
  return main;
}

}  // namespace rqs::problems
