#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rqs/arrangement.hpp"

namespace rqs::arr {

namespace {

using geom::line_intersection;

struct Probe {
  ExactPoint at;
  ExactPoint d1;
  ExactPoint d2;
};

int side_near(const ExactLine& l, const Probe& p) {
  int s = l.side(p.at);
  if (s != 0) return s;
  s = sgn(l.a() * p.d1.x + l.b() * p.d1.y);
  if (s != 0) return s;
  return sgn(l.a() * p.d2.x + l.b() * p.d2.y);
}

/// Keeps the part of `poly` where sign * (a x + b y - c) >= 0.
void clip(FacePolygon& poly, const ExactLine& l, int sign, int carrier) {
  const std::size_t n = poly.vertices.size();
  std::vector<Rat> val(n);
  bool any_out = false;
  for (std::size_t i = 0; i < n; ++i) {
    val[i] = l.eval(poly.vertices[i]) * sign;
    any_out |= sgn(val[i]) < 0;
  }
  if (!any_out) return;
  FacePolygon out;
  std::vector<bool> on_line;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    int si = sgn(val[i]);
    int sj = sgn(val[j]);
    if (si >= 0) {
      out.vertices.push_back(poly.vertices[i]);
      out.carriers.push_back(poly.carriers[i]);
      on_line.push_back(si == 0);
    }
    if (si * sj < 0) {
      const auto& a = poly.vertices[i];
      const auto& b = poly.vertices[j];
      Rat t = val[i] / (val[i] - val[j]);
      out.vertices.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
      out.carriers.push_back(si > 0 ? carrier : poly.carriers[i]);
      on_line.push_back(true);
    }
  }
  const std::size_t m = out.vertices.size();
  for (std::size_t i = 0; i < m; ++i)
    if (on_line[i] && on_line[(i + 1) % m]) out.carriers[i] = carrier;
  poly = std::move(out);
}

FacePolygon cut_face(std::span<const ExactLine> lines, const std::vector<int>& signs, const Box& box) {
  FacePolygon poly;
  poly.vertices = box.corners();
  poly.carriers.assign(4, kBoundary);
  for (std::size_t i = 0; i < lines.size() && poly.vertices.size() >= 3; ++i)
    clip(poly, lines[i], signs[i], static_cast<int>(i));
  return poly;
}

Rat along(const ExactLine& l, const ExactPoint& p) {
  ExactPoint d = l.direction();
  return d.x * p.x + d.y * p.y;
}

bool angle_less(const ExactPoint& u, const ExactPoint& v) {
  auto half = [](const ExactPoint& w) { return (sgn(w.y) > 0 || (sgn(w.y) == 0 && sgn(w.x) > 0)) ? 0 : 1; };
  int hu = half(u);
  int hv = half(v);
  if (hu != hv) return hu < hv;
  return sgn(u.x * v.y - u.y * v.x) > 0;
}

}  // namespace

std::size_t Zone::edge_count() const {
  std::size_t count = 0;
  for (const auto& f : faces)
    count += static_cast<std::size_t>(std::count_if(f.carriers.begin(), f.carriers.end(), [](int c) { return c >= 0; }));
  return count;
}

Zone zone_of_line(std::span<const ExactLine> lines, const ExactLine& line, const Box& box) {
  // Points of `line` inside the box: entry, exit and every crossing, grouped by position.
  std::vector<ExactPoint> hits;
  for (const ExactLine& side : {ExactLine::vertical(box.xmin), ExactLine::vertical(box.xmax),
                                ExactLine::horizontal(box.ymin), ExactLine::horizontal(box.ymax)}) {
    auto p = line_intersection(line, side);
    if (!p || p->x < box.xmin || p->x > box.xmax || p->y < box.ymin || p->y > box.ymax) continue;
    if (std::find(hits.begin(), hits.end(), *p) == hits.end()) hits.push_back(std::move(*p));
  }
  if (hits.size() < 2) throw std::invalid_argument("zone line misses the box");

  std::map<ExactPoint, std::vector<int>> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i] == line) continue;
    auto p = line_intersection(line, lines[i]);
    if (!p || !box.contains_strictly(*p)) continue;
    crossings[*p].push_back(static_cast<int>(i));
  }

  std::vector<std::pair<Rat, ExactPoint>> stops;
  for (const auto& h : hits) stops.emplace_back(along(line, h), h);
  for (const auto& [p, ids] : crossings) stops.emplace_back(along(line, p), p);
  std::sort(stops.begin(), stops.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const ExactPoint dir = line.direction();
  const ExactPoint normal{line.a(), line.b()};
  const ExactPoint anti{-line.a(), -line.b()};
  std::vector<Probe> probes;
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    const auto& p = stops[i].second;
    const auto& q = stops[i + 1].second;
    ExactPoint mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    probes.push_back({mid, normal, dir});
    probes.push_back({mid, anti, dir});
  }
  for (const auto& [x, ids] : crossings) {
    std::vector<ExactPoint> rays{dir, {-dir.x, -dir.y}};
    for (int id : ids) {
      ExactPoint u = lines[static_cast<std::size_t>(id)].direction();
      rays.push_back(u);
      rays.push_back({-u.x, -u.y});
    }
    std::sort(rays.begin(), rays.end(), angle_less);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const auto& u = rays[i];
      const auto& w = rays[(i + 1) % rays.size()];
      if (sgn(u.x * w.y - u.y * w.x) == 0 && sgn(u.x * w.x + u.y * w.y) > 0) continue;  // same ray twice
      probes.push_back({x, {u.x + w.x, u.y + w.y}, u});
    }
  }

  Zone zone{line, {}};
  std::set<std::vector<int>> seen;
  for (const auto& probe : probes) {
    std::vector<int> signs(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) signs[i] = side_near(lines[i], probe);
    if (!seen.insert(signs).second) continue;
    FacePolygon face = cut_face(lines, signs, box);
    if (face.vertices.size() >= 3) zone.faces.push_back(std::move(face));
  }
  return zone;
}

Zone zone_of_line(std::span<const ExactLine> lines, const ExactLine& line) {
  std::vector<ExactLine> all(lines.begin(), lines.end());
  all.push_back(line);
  return zone_of_line(lines, line, enclosing_bbox(all));
}

Zone zone_in_arrangement(const Dcel& d, const ExactLine& line) {
  std::set<int> faces;
  for (int f : faces_along_line(d, line)) faces.insert(f);
  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    if (line.side(d.vertices()[v]) != 0) continue;
    for (int h : d.outgoing(static_cast<int>(v))) {
      const int f = d.half_edges()[static_cast<std::size_t>(h)].face;
      if (d.faces()[static_cast<std::size_t>(f)].bounded) faces.insert(f);
    }
  }
  Zone zone{line, {}};
  for (int f : faces) {
    FacePolygon poly;
    for (int h : d.face_half_edges(f)) {
      const auto& he = d.half_edges()[static_cast<std::size_t>(h)];
      poly.vertices.push_back(d.vertices()[static_cast<std::size_t>(he.origin)]);
      poly.carriers.push_back(he.carrier);
    }
    zone.faces.push_back(std::move(poly));
  }
  return zone;
}

}  // namespace rqs::arr
