#include "rqs/instances.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rqs::problems {

namespace {

bool on_closed_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& p) {
  return geom::orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c, const ExactPoint& d) {
  const int o1 = geom::orient(a, b, c), o2 = geom::orient(a, b, d);
  const int o3 = geom::orient(c, d, a), o4 = geom::orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(a, b, c) || on_closed_segment(a, b, d) || on_closed_segment(c, d, a) ||
         on_closed_segment(c, d, b);
}

Rat signed_area2(const std::vector<ExactPoint>& v) {
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    s += p.x * q.y - p.y * q.x;
  }
  return s;
}

Rat dot(const ExactPoint& d, const ExactPoint& p) { return d.x * p.x + d.y * p.y; }
Rat cross(const ExactPoint& u, const ExactPoint& v) { return u.x * v.y - u.y * v.x; }

}  // namespace

void TriangleInstance::validate() const {
  if (points.size() < 3) throw std::invalid_argument("triangle instance needs at least 3 points");
  if (sgn(area_bound2) < 0) throw std::invalid_argument("area bound must be nonnegative");
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("duplicate points");
}

void DiskInstance::validate() const {
  if (depth_target < 1) throw std::invalid_argument("depth target must be at least 1");
  for (const auto& p : points)
    if (!(std::abs(p.x) <= geom::kMaxCoordinate && std::abs(p.y) <= geom::kMaxCoordinate))
      throw std::invalid_argument("disk centers must satisfy |coordinate| <= 1000");
}

void IntervalInstance::validate() const {
  for (const auto* set : {&P, &Q}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      if ((*set)[i].lo > (*set)[i].hi) throw std::invalid_argument("interval with lo > hi");
      if (i > 0 && !((*set)[i - 1].hi < (*set)[i].lo)) throw std::invalid_argument("intervals must be sorted and disjoint");
    }
  }
}

bool check_translation(const IntervalInstance& inst, const Rat& t) {
  std::size_t q = 0;
  for (const auto& p : inst.P) {
    const Rat lo = p.lo + t, hi = p.hi + t;
    while (q < inst.Q.size() && inst.Q[q].hi < hi) ++q;
    if (q == inst.Q.size() || inst.Q[q].lo > lo) return false;
  }
  return true;
}

void PolygonInstance::validate() const {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  if (pieces <= 2) throw std::invalid_argument("piece count K must exceed 2");
  if (edge < 0 || static_cast<std::size_t>(edge) >= n) throw std::invalid_argument("edge index out of range");
  if (sgn(signed_area2(vertices)) <= 0) throw std::invalid_argument("polygon must be counter-clockwise");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    if (a == b) throw std::invalid_argument("repeated polygon vertex");
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = vertices[j];
      const auto& d = vertices[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Consecutive edges may only share their common endpoint.
        const ExactPoint& shared = (j == i + 1) ? b : a;
        const ExactPoint& far1 = (j == i + 1) ? a : b;
        const ExactPoint& far2 = (j == i + 1) ? d : c;
        if (geom::orient(far1, shared, far2) == 0 && dot({far1.x - shared.x, far1.y - shared.y}, {far2.x - shared.x, far2.y - shared.y}) > 0)
          throw std::invalid_argument("polygon is not simple");
        continue;
      }
      if (segments_meet(a, b, c, d)) throw std::invalid_argument("polygon is not simple");
    }
  }
}

std::size_t count_pieces(const PolygonInstance& poly, const ExactLine& line) {
  const std::size_t n = poly.vertices.size();
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = line.side(poly.vertices[i]);
    if (s == 0) throw std::invalid_argument("line passes through a polygon vertex");
    if (s * line.side(poly.vertices[(i + 1) % n]) < 0) ++crossings;
  }
  return crossings / 2 + 1;
}

bool crosses_edge(const PolygonInstance& poly, const ExactLine& line) {
  const auto& a = poly.vertices[static_cast<std::size_t>(poly.edge)];
  const auto& b = poly.vertices[(static_cast<std::size_t>(poly.edge) + 1) % poly.vertices.size()];
  return line.side(a) * line.side(b) < 0;
}

bool is_cut_witness(const PolygonInstance& poly, const ExactLine& line) {
  for (const auto& v : poly.vertices)
    if (line.side(v) == 0) return false;
  return count_pieces(poly, line) == static_cast<std::size_t>(poly.pieces) && crosses_edge(poly, line);
}

std::optional<ExactLine> polygon_cut_check(const PolygonInstance& poly, int u, int v) {
  if (u == v) throw std::invalid_argument("polygon_cut_check needs two distinct vertices");
  const auto& pu = poly.vertices.at(static_cast<std::size_t>(u));
  const auto& pv = poly.vertices.at(static_cast<std::size_t>(v));
  const ExactLine l1 = ExactLine::through(pu, pv);
  std::optional<Rat> above, below;
  for (const auto& p : poly.vertices) {
    Rat e = l1.eval(p);
    if (sgn(e) > 0 && (!above || e < *above)) above = e;
    if (sgn(e) < 0 && (!below || e > *below)) below = e;
  }
  for (const auto* level : {&above, &below}) {
    if (!*level) continue;
    ExactLine cand(l1.a(), l1.b(), l1.c() + **level / 2);
    if (is_cut_witness(poly, cand)) return cand;
  }
  return std::nullopt;
}

void ProjectionInstance::validate() const {
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    const auto& poly = polygons[k];
    if (poly.empty()) throw std::invalid_argument("empty polygon " + std::to_string(k));
    const std::size_t n = poly.size();
    if (n < 3) continue;  // points and segments are convex
    if (sgn(signed_area2(poly)) <= 0) throw std::invalid_argument("polygon " + std::to_string(k) + " must be counter-clockwise");
    for (std::size_t i = 0; i < n; ++i)
      if (geom::orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) < 0)
        throw std::invalid_argument("polygon " + std::to_string(k) + " is not convex");
  }
}

namespace {

struct Span {
  Rat lo, hi;
  int id;
};

std::vector<Span> project(const ProjectionInstance& inst, const ExactPoint& d) {
  std::vector<Span> out;
  out.reserve(inst.polygons.size());
  for (std::size_t k = 0; k < inst.polygons.size(); ++k) {
    Span s{dot(d, inst.polygons[k][0]), dot(d, inst.polygons[k][0]), static_cast<int>(k)};
    for (const auto& p : inst.polygons[k]) {
      Rat v = dot(d, p);
      if (v < s.lo) s.lo = v;
      if (v > s.hi) s.hi = v;
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Span& a, const Span& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  return out;
}

}  // namespace

bool projections_disjoint(const ProjectionInstance& inst, const ExactPoint& d) {
  if (sgn(d.x) == 0 && sgn(d.y) == 0) return false;
  auto spans = project(inst, d);
  for (std::size_t i = 0; i + 1 < spans.size(); ++i)
    if (!(spans[i].hi < spans[i + 1].lo)) return false;
  return true;
}

std::vector<ExactPoint> inner_tangent_normals(const ProjectionInstance& inst, int i, int j) {
  const auto& A = inst.polygons.at(static_cast<std::size_t>(i));
  const auto& B = inst.polygons.at(static_cast<std::size_t>(j));
  std::vector<ExactPoint> out;
  for (const auto& p : A) {
    for (const auto& r : B) {
      if (p == r) continue;
      bool a_le = true, a_ge = true, b_le = true, b_ge = true;
      for (const auto& x : A) {
        int s = geom::orient(p, r, x);
        a_le &= s <= 0;
        a_ge &= s >= 0;
      }
      for (const auto& x : B) {
        int s = geom::orient(p, r, x);
        b_le &= s <= 0;
        b_ge &= s >= 0;
      }
      if (!((a_le && b_ge) || (a_ge && b_le))) continue;
      ExactPoint n{p.y - r.y, r.x - p.x};
      bool seen = std::any_of(out.begin(), out.end(), [&](const ExactPoint& m) { return sgn(cross(m, n)) == 0; });
      if (!seen) out.push_back(std::move(n));
    }
  }
  return out;
}

std::optional<ExactPoint> disjoint_projection_check(const ProjectionInstance& inst, int i, int j) {
  if (i == j) throw std::invalid_argument("disjoint_projection_check needs two distinct objects");
  const auto critical = inner_tangent_normals(inst, i, j);
  for (const auto& dc : critical) {
    const auto spans = project(inst, dc);
    std::vector<ExactPoint> others(critical.begin(), critical.end());
    for (std::size_t s = 0; s + 1 < spans.size(); ++s)
      for (auto& c : inner_tangent_normals(inst, spans[s].id, spans[s + 1].id)) others.push_back(std::move(c));
    for (int sense : {1, -1}) {
      std::optional<ExactPoint> next;
      for (auto c : others) {
        int s = sgn(cross(dc, c)) * sense;
        if (s == 0) continue;
        if (s < 0) c = {-c.x, -c.y};
        if (!next || sgn(cross(c, *next)) * sense > 0) next = c;
      }
      ExactPoint step = next ? *next : ExactPoint{-dc.y * sense, dc.x * sense};
      ExactPoint w{dc.x + step.x, dc.y + step.y};
      if (projections_disjoint(inst, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace rqs::problems
