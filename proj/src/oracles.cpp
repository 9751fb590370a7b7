#include "rqs/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace rqs::oracles {

MinTriangle oracle_min_area_triangle(const std::vector<ExactPoint>& points) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("need at least 3 points");
  std::optional<MinTriangle> best;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Rat area2 = geom::triangle_area2(points[a], points[b], points[c]);
        if (!best || area2 < best->area2)
          best = MinTriangle{std::move(area2), {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}};
      }
  return *best;
}

MaxDepth oracle_max_disk_depth(const std::vector<ApproxPoint>& centers) {
  MaxDepth best;
  auto consider = [&](const ApproxPoint& p) {
    int d = 0;
    for (const auto& c : centers)
      if (geom::distance(p, c) <= 1 + geom::kTolerance) ++d;
    if (d > best.depth) best = {d, p};
  };
  for (const auto& c : centers) consider(c);
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      for (const auto& p : geom::circle_circle_intersections(centers[i], centers[j], 1.0)) consider(p);
  return best;
}

std::optional<Rat> oracle_interval_containment(const problems::IntervalInstance& inst) {
  for (const auto& p : inst.P)
    for (const auto& q : inst.Q)
      for (const Rat* pe : {&p.lo, &p.hi})
        for (const Rat* qe : {&q.lo, &q.hi}) {
          Rat t = *qe - *pe;
          if (problems::check_translation(inst, t)) return t;
        }
  if (inst.P.empty()) return Rat(0);
  return std::nullopt;
}

std::optional<PairWitness> oracle_pair_search(std::size_t n, const problems::PairCheck& check) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      QueryLedger unused;
      if (auto w = check(static_cast<int>(i), static_cast<int>(j), unused)) return w;
    }
  return std::nullopt;
}

std::optional<PointWitness> oracle_concurrence(const std::vector<ExactLine>& lines) {
  const std::size_t n = lines.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto p = geom::line_intersection(lines[a], lines[b]);
      if (!p) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (lines[c].side(*p) != 0) continue;
        PointWitness w{*p, {}};
        for (std::size_t i = 0; i < n; ++i)
          if (lines[i].side(*p) == 0) w.lines.push_back(static_cast<int>(i));
        return w;
      }
    }
  return std::nullopt;
}

}  // namespace rqs::oracles
