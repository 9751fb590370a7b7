#include "rqs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace rqs::gen {

Rat random_rational(Rng& rng, long scale, long den) {
  std::uniform_int_distribution<long> pick(-scale, scale);
  Rat r(pick(rng), den);
  r.canonicalize();
  return r;
}

std::vector<ExactLine> random_lines(std::size_t n, Rng& rng) {
  std::set<ExactPoint> seen;
  std::vector<ExactLine> out;
  while (out.size() < n) {
    ExactPoint p{random_rational(rng), random_rational(rng)};
    if (!seen.insert(p).second) continue;
    out.push_back(geom::dual_of_point(p));
  }
  return out;
}

std::vector<ExactLine> planted_concurrence(std::size_t n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("planting needs n >= 3");
  std::vector<ExactLine> out = random_lines(n, rng);
  ExactPoint c{random_rational(rng), random_rational(rng)};
  std::vector<Rat> slopes;
  while (slopes.size() < 3) {
    Rat s = random_rational(rng, 10000, 1000);
    if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
  }
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  std::set<std::size_t> slots;
  while (slots.size() < 3) slots.insert(pos(rng));
  std::size_t i = 0;
  for (std::size_t s : slots) {
    ExactLine l = ExactLine::from_slope(slopes[i], c.y - slopes[i] * c.x);
    ++i;
    if (std::find(out.begin(), out.end(), l) != out.end()) continue;  // already present
    out[s] = l;
  }
  return out;
}

std::vector<ExactPoint> lattice_points(std::size_t n, long side, Rng& rng) {
  if (static_cast<double>(n) > static_cast<double>(side) * static_cast<double>(side))
    throw std::invalid_argument("lattice too small");
  std::uniform_int_distribution<long> pick(0, side - 1);
  std::set<ExactPoint> seen;
  std::vector<ExactPoint> out;
  while (out.size() < n) {
    ExactPoint p{Rat(pick(rng)), Rat(pick(rng))};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

std::vector<geom::ApproxPoint> disk_centers(std::size_t n, double side, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<geom::ApproxPoint> out(n);
  for (auto& p : out) {
    p.x = u(rng);
    p.y = u(rng);
  }
  return out;
}

problems::IntervalInstance interval_instance(std::size_t n, Rng& rng, bool perturb) {
  std::uniform_int_distribution<long> gap(1, 5), len(0, 6);
  problems::IntervalInstance inst;
  long x = 0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    x += gap(rng);
    long l = len(rng);
    inst.Q.push_back({Rat(x), Rat(x + l)});
    x += l;
  }
  // Sub-sample n of Q, shrink each inside its host and shift everything by -t.
  std::vector<std::size_t> idx(inst.Q.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  const Rat t(std::uniform_int_distribution<long>(-50, 50)(rng));
  for (std::size_t i : idx) {
    const auto& q = inst.Q[i];
    std::uniform_int_distribution<long> cut(0, 1);
    Rat lo = q.lo, hi = q.hi;
    if (hi - lo >= 2) {
      lo += cut(rng);
      hi -= cut(rng);
    }
    inst.P.push_back({lo - t, hi - t});
  }
  if (perturb && !inst.P.empty()) {
    std::uniform_int_distribution<std::size_t> which(0, inst.P.size() - 1);
    auto& p = inst.P[which(rng)];
    p.hi += 1;
    // Keep P disjoint: drop any interval the widened one now touches.
    std::vector<problems::Interval> kept;
    for (const auto& iv : inst.P)
      if (kept.empty() || kept.back().hi < iv.lo) kept.push_back(iv);
    inst.P = std::move(kept);
  }
  return inst;
}

std::vector<ExactPoint> star_polygon(std::size_t n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_int_distribution<long> radius(20, 100);
  for (;;) {
    std::vector<double> th(n);
    for (auto& a : th) a = angle(rng);
    std::sort(th.begin(), th.end());
    std::vector<ExactPoint> poly;
    for (double a : th) {
      const double r = static_cast<double>(radius(rng));
      poly.push_back({Rat(std::lround(r * std::cos(a))), Rat(std::lround(r * std::sin(a)))});
    }
    problems::PolygonInstance probe{poly, 0, 3};
    try {
      probe.validate();
      return poly;
    } catch (const std::invalid_argument&) {
      // rounding made it non-simple or clockwise; draw again
    }
  }
}

std::vector<std::vector<ExactPoint>> convex_polygons(std::size_t n, long side, Rng& rng) {
  std::uniform_int_distribution<long> pos(0, side), ext(1, 4);
  std::vector<std::vector<ExactPoint>> out;
  while (out.size() < n) {
    const long x = pos(rng), y = pos(rng);
    std::vector<ExactPoint> q{{Rat(x), Rat(y)}, {Rat(x + ext(rng)), Rat(y)}, {Rat(x + ext(rng)), Rat(y + ext(rng))}};
    if (ext(rng) % 2 == 0) q.push_back({Rat(x), Rat(y + ext(rng))});
    problems::ProjectionInstance probe{{q}};
    try {
      probe.validate();
      out.push_back(std::move(q));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace rqs::gen
