#include "rqs/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rqs::arr {

namespace {

using geom::line_intersection;

/// Counter-clockwise angular order of direction vectors, starting at the positive x-axis.
bool angle_less(const ExactPoint& u, const ExactPoint& v) {
  auto half = [](const ExactPoint& w) { return (sgn(w.y) > 0 || (sgn(w.y) == 0 && sgn(w.x) > 0)) ? 0 : 1; };
  int hu = half(u);
  int hv = half(v);
  if (hu != hv) return hu < hv;
  return sgn(u.x * v.y - u.y * v.x) > 0;
}

ExactPoint sub(const ExactPoint& a, const ExactPoint& b) { return {a.x - b.x, a.y - b.y}; }

// Floating-point filters. Coordinates rounded to binary64 are off by at most one unit in
// the last place; each bound below overestimates the accumulated error several times, and
// a result inside it falls back to exact arithmetic (0 means "undecided").
constexpr double kUlp = 0x1p-52;

/// Sign of the cross product of two difference vectors whose components carry absolute
/// error at most e.
int filtered_cross(double ux, double uy, double vx, double vy, double e) {
  const double c = ux * vy - uy * vx;
  const double bound = 2 * (e * (std::abs(ux) + std::abs(uy) + std::abs(vx) + std::abs(vy)) + 2 * e * e +
                            kUlp * (std::abs(ux * vy) + std::abs(uy * vx)));
  if (c > bound) return 1;
  if (c < -bound) return -1;
  return 0;
}

/// Sign of a*x + b*y - c from rounded inputs.
int filtered_eval(double a, double b, double c, const geom::ApproxPoint& p) {
  const double v = a * p.x + b * p.y - c;
  const double bound = 8 * kUlp * (std::abs(a * p.x) + std::abs(b * p.y) + std::abs(c));
  if (v > bound) return 1;
  if (v < -bound) return -1;
  return 0;
}

Rat along(const ExactLine& l, const ExactPoint& p) {
  ExactPoint d = l.direction();
  return d.x * p.x + d.y * p.y;
}

/// Extreme abscissae of pairwise intersections of non-vertical lines: the first and last
/// crossings involve lines adjacent in slope order at -inf / +inf.
void extreme_crossings(std::span<const ExactLine> lines, std::optional<Rat>& lo, std::optional<Rat>& hi) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!lines[i].is_vertical()) idx.push_back(i);
  auto consider = [&](const std::vector<std::size_t>& order) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      auto p = line_intersection(lines[order[i]], lines[order[i + 1]]);
      if (!p) continue;
      if (!lo || p->x < *lo) lo = p->x;
      if (!hi || p->x > *hi) hi = p->x;
    }
  };
  std::vector<Rat> slope(lines.size()), icpt(lines.size());
  for (std::size_t i : idx) {
    slope[i] = -lines[i].a() / lines[i].b();
    icpt[i] = lines[i].c() / lines[i].b();
  }
  std::vector<std::size_t> order = idx;
  // Bottom-to-top order at x -> -inf, then at x -> +inf.
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (slope[i] != slope[j]) return slope[i] > slope[j];
    return icpt[i] < icpt[j];
  });
  consider(order);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (slope[i] != slope[j]) return slope[i] < slope[j];
    return icpt[i] < icpt[j];
  });
  consider(order);
}

}  // namespace

Box enclosing_bbox(std::span<const ExactLine> lines) {
  std::optional<Rat> lo, hi;
  extreme_crossings(lines, lo, hi);
  for (const auto& l : lines) {
    if (!l.is_vertical()) continue;
    const Rat& x = l.c();
    if (!lo || x < *lo) lo = x;
    if (!hi || x > *hi) hi = x;
  }
  Box box;
  if (!lo) {
    box.xmin = -1;
    box.xmax = 1;
  } else {
    box.xmin = *lo - 1;
    box.xmax = *hi + 1;
  }
  std::optional<Rat> ylo, yhi;
  for (const auto& l : lines) {
    if (l.is_vertical()) continue;
    for (const Rat* x : {&box.xmin, &box.xmax}) {
      Rat y = l.y_at(*x);
      if (!ylo || y < *ylo) ylo = y;
      if (!yhi || y > *yhi) yhi = y;
    }
  }
  if (!ylo) {
    box.ymin = -1;
    box.ymax = 1;
  } else {
    box.ymin = *ylo - 1;
    box.ymax = *yhi + 1;
  }
  return box;
}

// ---------------------------------------------------------------------------
// Dcel

Dcel Dcel::from_edges(std::vector<ExactPoint> vertices, const std::vector<EdgeSpec>& edges) {
  Dcel d;
  d.vertices_ = std::move(vertices);
  const std::size_t nv = d.vertices_.size();
  d.outgoing_.assign(nv, {});
  d.half_edges_.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("zero-length edge");
    int h = static_cast<int>(d.half_edges_.size());
    d.half_edges_.push_back({e.u, h + 1, -1, -1, e.carrier});
    d.half_edges_.push_back({e.v, h, -1, -1, e.carrier});
    d.outgoing_[static_cast<std::size_t>(e.u)].push_back(h);
    d.outgoing_[static_cast<std::size_t>(e.v)].push_back(h + 1);
  }
  d.approx_.reserve(nv);
  for (const auto& p : d.vertices_) d.approx_.push_back({p.x.get_d(), p.y.get_d()});
  for (std::size_t v = 0; v < nv; ++v) {
    auto& out = d.outgoing_[v];
    const auto& o = d.approx_[v];
    double scale = std::max(std::abs(o.x), std::abs(o.y));
    for (int h : out) {
      const auto& q = d.approx_[static_cast<std::size_t>(d.dest(h))];
      scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
    }
    const double e = 4 * kUlp * scale;
    auto exact_dir = [&](int h) { return sub(d.vertices_[static_cast<std::size_t>(d.dest(h))], d.vertices_[v]); };
    auto less = [&](int g, int h) {
      const auto& p = d.approx_[static_cast<std::size_t>(d.dest(g))];
      const auto& q = d.approx_[static_cast<std::size_t>(d.dest(h))];
      const double ux = p.x - o.x, uy = p.y - o.y, wx = q.x - o.x, wy = q.y - o.y;
      if (std::abs(uy) > e && std::abs(wy) > e) {
        const int hu = uy > 0 ? 0 : 1, hw = wy > 0 ? 0 : 1;
        if (hu != hw) return hu < hw;
        if (int c = filtered_cross(ux, uy, wx, wy, e)) return c > 0;
      }
      return angle_less(exact_dir(g), exact_dir(h));
    };
    std::sort(out.begin(), out.end(), less);
  }
  // next(h) is the clockwise neighbour of twin(h) around dest(h): the face stays on the left.
  std::vector<std::size_t> position(d.half_edges_.size());
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t i = 0; i < d.outgoing_[v].size(); ++i) position[static_cast<std::size_t>(d.outgoing_[v][i])] = i;
  for (std::size_t h = 0; h < d.half_edges_.size(); ++h) {
    int t = d.half_edges_[h].twin;
    int v = d.half_edges_[static_cast<std::size_t>(t)].origin;
    const auto& out = d.outgoing_[static_cast<std::size_t>(v)];
    std::size_t i = position[static_cast<std::size_t>(t)];
    d.half_edges_[h].next = out[(i + out.size() - 1) % out.size()];
  }
  for (std::size_t h = 0; h < d.half_edges_.size(); ++h) {
    if (d.half_edges_[h].face >= 0) continue;
    int f = static_cast<int>(d.faces_.size());
    // The smallest vertex of a cycle is a strict corner; its turn gives the orientation.
    int cur = static_cast<int>(h), low = cur, before_low = -1, prev = -1;
    do {
      auto& he = d.half_edges_[static_cast<std::size_t>(cur)];
      he.face = f;
      if (d.vertices_[static_cast<std::size_t>(he.origin)] < d.vertices_[static_cast<std::size_t>(d.half_edges_[static_cast<std::size_t>(low)].origin)]) {
        low = cur;
        before_low = prev;
      }
      prev = cur;
      cur = he.next;
    } while (cur != static_cast<int>(h));
    if (before_low < 0) before_low = prev;  // the cycle starts at its smallest vertex
    const auto& a = d.vertices_[static_cast<std::size_t>(d.half_edges_[static_cast<std::size_t>(before_low)].origin)];
    const auto& b = d.vertices_[static_cast<std::size_t>(d.half_edges_[static_cast<std::size_t>(low)].origin)];
    const auto& c = d.vertices_[static_cast<std::size_t>(d.dest(low))];
    d.faces_.push_back({static_cast<int>(h), geom::orient(a, b, c) > 0});
  }
  return d;
}

std::vector<int> Dcel::face_half_edges(int f) const {
  std::vector<int> out;
  int start = faces_[static_cast<std::size_t>(f)].edge;
  int cur = start;
  do {
    out.push_back(cur);
    cur = half_edges_[static_cast<std::size_t>(cur)].next;
  } while (cur != start);
  return out;
}

std::vector<int> Dcel::face_vertices(int f) const {
  std::vector<int> out;
  for (int h : face_half_edges(f)) out.push_back(half_edges_[static_cast<std::size_t>(h)].origin);
  return out;
}

std::vector<ExactPoint> Dcel::face_polygon(int f) const {
  std::vector<ExactPoint> out;
  for (int v : face_vertices(f)) out.push_back(vertices_[static_cast<std::size_t>(v)]);
  return out;
}

std::size_t Dcel::bounded_face_count() const {
  return static_cast<std::size_t>(std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.bounded; }));
}

std::size_t Dcel::corner_count(int f) const {
  auto poly = face_polygon(f);
  std::size_t n = poly.size();
  std::size_t corners = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (geom::orient(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]) != 0) ++corners;
  return corners;
}

std::string Dcel::audit() const {
  std::ostringstream why;
  const std::size_t nh = half_edges_.size();
  std::vector<int> seen(nh, 0);
  for (std::size_t h = 0; h < nh; ++h) {
    const auto& he = half_edges_[h];
    if (he.twin < 0 || static_cast<std::size_t>(he.twin) >= nh || half_edges_[static_cast<std::size_t>(he.twin)].twin != static_cast<int>(h)) {
      why << "twin(twin(" << h << ")) != " << h;
      return why.str();
    }
    if (he.next < 0 || static_cast<std::size_t>(he.next) >= nh) {
      why << "next of " << h << " out of range";
      return why.str();
    }
    const auto& nx = half_edges_[static_cast<std::size_t>(he.next)];
    if (nx.origin != dest(static_cast<int>(h))) {
      why << "origin(next(" << h << ")) != dest(" << h << ")";
      return why.str();
    }
    if (nx.face != he.face) {
      why << "face(next(" << h << ")) != face(" << h << ")";
      return why.str();
    }
  }
  std::size_t unbounded = 0;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::vector<int> verts;
    for (int h : face_half_edges(static_cast<int>(f))) {
      ++seen[static_cast<std::size_t>(h)];
      verts.push_back(half_edges_[static_cast<std::size_t>(h)].origin);
    }
    if (!faces_[f].bounded) {
      ++unbounded;
      continue;
    }
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
      why << "bounded face " << f << " boundary is not a simple cycle";
      return why.str();
    }
  }
  for (std::size_t h = 0; h < nh; ++h) {
    if (seen[h] != 1) {
      why << "half-edge " << h << " appears in " << seen[h] << " face cycles";
      return why.str();
    }
  }
  if (unbounded != 1) {
    why << "expected exactly one outer face, found " << unbounded;
    return why.str();
  }
  long euler = static_cast<long>(vertices_.size()) - static_cast<long>(edge_count()) + static_cast<long>(faces_.size());
  if (euler != 2) {
    why << "Euler characteristic V - E + F = " << euler;
    return why.str();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Construction

namespace {

/// Box-boundary points of a line, sorted along the line direction.
std::vector<ExactPoint> box_hits(const ExactLine& l, const Box& box) {
  std::vector<ExactPoint> hits;
  auto push = [&](ExactPoint p) {
    if (p.x < box.xmin || p.x > box.xmax || p.y < box.ymin || p.y > box.ymax) return;
    for (const auto& q : hits)
      if (q == p) return;
    hits.push_back(std::move(p));
  };
  for (const ExactLine& side : {ExactLine::vertical(box.xmin), ExactLine::vertical(box.xmax),
                                ExactLine::horizontal(box.ymin), ExactLine::horizontal(box.ymax)}) {
    if (auto p = line_intersection(l, side)) push(std::move(*p));
  }
  std::sort(hits.begin(), hits.end(), [&](const ExactPoint& p, const ExactPoint& q) { return along(l, p) < along(l, q); });
  return hits;
}

class VertexPool {
 public:
  int id(const ExactPoint& p) {
    auto [it, inserted] = index_.try_emplace(p, static_cast<int>(points_.size()));
    if (inserted) points_.push_back(p);
    return it->second;
  }
  std::vector<ExactPoint> take() { return std::move(points_); }

 private:
  std::map<ExactPoint, int> index_;
  std::vector<ExactPoint> points_;
};

}  // namespace

Dcel build_arrangement(std::span<const ExactLine> lines, const Box& box) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        throw std::invalid_argument("duplicate lines " + std::to_string(i) + " and " + std::to_string(j));

  VertexPool pool;
  std::vector<EdgeSpec> edges;
  auto corners = box.corners();
  // Points on each box side, keyed by side index 0..3 (bottom, right, top, left).
  std::vector<std::vector<int>> side_points(4);
  for (int s = 0; s < 4; ++s) {
    side_points[static_cast<std::size_t>(s)].push_back(pool.id(corners[static_cast<std::size_t>(s)]));
    side_points[static_cast<std::size_t>(s)].push_back(pool.id(corners[static_cast<std::size_t>((s + 1) % 4)]));
  }
  auto register_on_box = [&](const ExactPoint& p, int id) {
    if (p.y == box.ymin) side_points[0].push_back(id);
    if (p.x == box.xmax) side_points[1].push_back(id);
    if (p.y == box.ymax) side_points[2].push_back(id);
    if (p.x == box.xmin) side_points[3].push_back(id);
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    auto hits = box_hits(l, box);
    if (hits.size() < 2) throw std::invalid_argument("line " + std::to_string(i) + " misses the clipping box");
    std::vector<std::pair<Rat, int>> pts;
    for (const auto& h : hits) {
      int id = pool.id(h);
      register_on_box(h, id);
      pts.emplace_back(along(l, h), id);
    }
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      auto p = line_intersection(l, lines[j]);
      if (!p) continue;
      if (!box.contains_strictly(*p)) throw std::invalid_argument("intersection outside the clipping box");
      Rat t = along(l, *p);
      pts.emplace_back(std::move(t), pool.id(*p));
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.second == b.second; }), pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      edges.push_back({pts[k].second, pts[k + 1].second, static_cast<int>(i)});
  }

  auto vertices = pool.take();
  for (int s = 0; s < 4; ++s) {
    auto& ids = side_points[static_cast<std::size_t>(s)];
    bool horizontal = (s == 0 || s == 2);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const auto& p = vertices[static_cast<std::size_t>(a)];
      const auto& q = vertices[static_cast<std::size_t>(b)];
      return horizontal ? p.x < q.x : p.y < q.y;
    });
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) edges.push_back({ids[k], ids[k + 1], kBoundary});
  }
  return Dcel::from_edges(std::move(vertices), edges);
}

Dcel triangulate(const Dcel& d) {
  std::vector<EdgeSpec> edges;
  const auto& hes = d.half_edges();
  for (std::size_t h = 0; h < hes.size(); h += 2) edges.push_back({hes[h].origin, hes[h + 1].origin, hes[h].carrier});
  const auto& verts = d.vertices();
  for (std::size_t f = 0; f < d.faces().size(); ++f) {
    if (!d.faces()[f].bounded) continue;
    const auto ring = d.face_half_edges(static_cast<int>(f));
    const std::size_t n = ring.size();
    std::vector<int> corners;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& in = hes[static_cast<std::size_t>(ring[(i + n - 1) % n])];
      const auto& out = hes[static_cast<std::size_t>(ring[i])];
      // Edges on input lines: same line means straight, distinct lines always turn.
      bool turn;
      if (in.carrier >= 0 && out.carrier >= 0) {
        turn = in.carrier != out.carrier;
      } else {
        turn = geom::orient(verts[static_cast<std::size_t>(in.origin)], verts[static_cast<std::size_t>(out.origin)],
                            verts[static_cast<std::size_t>(d.dest(ring[i]))]) != 0;
      }
      if (turn) corners.push_back(out.origin);
    }
    if (corners.size() <= 3) continue;
    std::size_t apex = 0;
    for (std::size_t i = 1; i < corners.size(); ++i)
      if (verts[static_cast<std::size_t>(corners[i])] < verts[static_cast<std::size_t>(corners[apex])]) apex = i;
    const std::size_t m = corners.size();
    for (std::size_t step = 2; step + 1 < m; ++step)
      edges.push_back({corners[apex], corners[(apex + step) % m], kSupport});
  }
  return Dcel::from_edges(verts, edges);
}

// ---------------------------------------------------------------------------
// Subproblems

bool line_meets_face(const Dcel& d, int f, const ExactLine& line) {
  auto poly = d.face_polygon(f);
  const std::size_t n = poly.size();
  bool pos = false, neg = false;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = line.side(poly[i]);
    pos |= s[i] > 0;
    neg |= s[i] < 0;
  }
  if (pos && neg) return true;
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] == 0 && s[(i + 1) % n] == 0) return true;
  return false;
}

std::vector<SubproblemSpec> subproblems_of(const Dcel& d, std::size_t object_count, const CrossingPredicate& crosses) {
  std::vector<SubproblemSpec> out;
  for (std::size_t f = 0; f < d.faces().size(); ++f) {
    if (!d.faces()[f].bounded) continue;
    SubproblemSpec spec;
    spec.region = static_cast<int>(f);
    for (std::size_t o = 0; o < object_count; ++o)
      if (crosses(static_cast<int>(f), static_cast<int>(o))) spec.objects.push_back(static_cast<int>(o));
    out.push_back(std::move(spec));
  }
  return out;
}

namespace {

struct Location {
  int vertex = -1;     // set when the point is a vertex
  int half_edge = -1;  // otherwise the half-edge whose relative interior holds it
};


}  // namespace

std::vector<int> faces_along_line(const Dcel& d, const ExactLine& line) {
  const auto& verts = d.vertices();
  const auto& hes = d.half_edges();
  const ExactPoint dir = line.direction();
  const double la = line.a().get_d(), lb = line.b().get_d(), lc = line.c().get_d();
  const auto& approx = d.approx();
  auto side_of = [&](int v) {
    if (int s = filtered_eval(la, lb, lc, approx[static_cast<std::size_t>(v)])) return s;
    return line.side(verts[static_cast<std::size_t>(v)]);
  };
  std::vector<int> visited;
  auto record = [&](int f) {
    if (f >= 0 && d.faces()[static_cast<std::size_t>(f)].bounded &&
        std::find(visited.begin(), visited.end(), f) == visited.end())
      visited.push_back(f);
  };

  // Entry point: the first point of the line on the outer boundary.
  int outer = -1;
  for (std::size_t f = 0; f < d.faces().size(); ++f)
    if (!d.faces()[f].bounded) outer = static_cast<int>(f);
  std::optional<std::pair<Rat, Location>> entry;
  for (int h : d.face_half_edges(outer)) {
    const auto& a = verts[static_cast<std::size_t>(hes[static_cast<std::size_t>(h)].origin)];
    const auto& b = verts[static_cast<std::size_t>(d.dest(h))];
    Location loc;
    std::optional<ExactPoint> p;
    int sa = side_of(hes[static_cast<std::size_t>(h)].origin), sb = side_of(d.dest(h));
    if (sa == 0) {
      p = a;
      loc.vertex = hes[static_cast<std::size_t>(h)].origin;
    } else if (sa * sb < 0) {
      p = line_intersection(line, ExactLine::through(a, b));
      loc.half_edge = hes[static_cast<std::size_t>(h)].twin;  // the inner side
    }
    if (!p) continue;
    Rat t = along(line, *p);
    if (!entry || t < entry->first) entry = std::make_pair(std::move(t), loc);
  }
  if (!entry) return visited;

  Location loc = entry->second;
  int face = -1;
  for (std::size_t guard = 0; guard < hes.size() + 4; ++guard) {
    if (loc.vertex >= 0) {
      // Pick the wedge around the vertex that contains the walking direction.
      const auto& out = d.outgoing(loc.vertex);
      const auto& v = verts[static_cast<std::size_t>(loc.vertex)];
      int along_edge = -1;
      face = -1;
      for (std::size_t i = 0; i < out.size(); ++i) {
        ExactPoint u = sub(verts[static_cast<std::size_t>(d.dest(out[i]))], v);
        if (sgn(u.x * dir.y - u.y * dir.x) == 0 && sgn(u.x * dir.x + u.y * dir.y) > 0) {
          along_edge = out[i];
          break;
        }
      }
      if (along_edge >= 0) {
        record(hes[static_cast<std::size_t>(along_edge)].face);
        record(hes[static_cast<std::size_t>(hes[static_cast<std::size_t>(along_edge)].twin)].face);
        loc = {d.dest(along_edge), -1};
        continue;
      }
      for (std::size_t i = 0; i < out.size(); ++i) {
        ExactPoint u = sub(verts[static_cast<std::size_t>(d.dest(out[i]))], v);
        ExactPoint w = sub(verts[static_cast<std::size_t>(d.dest(out[(i + 1) % out.size()]))], v);
        bool after_u = sgn(u.x * dir.y - u.y * dir.x) > 0;
        bool before_w = sgn(dir.x * w.y - dir.y * w.x) > 0;
        bool wide = sgn(u.x * w.y - u.y * w.x) <= 0;  // wedge of at least 180 degrees
        if (out.size() == 1 || (wide ? (after_u || before_w) : (after_u && before_w))) {
          face = hes[static_cast<std::size_t>(out[i])].face;
          break;
        }
      }
    } else {
      face = hes[static_cast<std::size_t>(loc.half_edge)].face;
    }
    if (face < 0 || !d.faces()[static_cast<std::size_t>(face)].bounded) break;
    record(face);
    // Exit point of the convex face. A properly crossed edge the direction leaves through
    // (its right side) is the exit; otherwise the exit is the farthest vertex on the line.
    const auto ring = d.face_half_edges(face);
    std::vector<int> sides(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
      sides[i] = side_of(hes[static_cast<std::size_t>(ring[i])].origin);
    std::optional<Location> exit;
    std::optional<Rat> best;
    for (std::size_t i = 0; i < ring.size() && !exit; ++i) {
      const int h = ring[i];
      const int sa = sides[i], sb = sides[(i + 1) % ring.size()];
      if (sa * sb >= 0) continue;
      // The line properly crosses this edge, so the two are not parallel and the sign is never 0.
      const auto& pa = approx[static_cast<std::size_t>(hes[static_cast<std::size_t>(h)].origin)];
      const auto& pb = approx[static_cast<std::size_t>(d.dest(h))];
      const double scale = std::max({std::abs(pa.x), std::abs(pa.y), std::abs(pb.x), std::abs(pb.y)});
      int turn = filtered_cross(pb.x - pa.x, pb.y - pa.y, lb, -la, 4 * kUlp * std::max({scale, std::abs(la), std::abs(lb)}));
      if (turn == 0) {
        const ExactPoint e = sub(verts[static_cast<std::size_t>(d.dest(h))], verts[static_cast<std::size_t>(hes[static_cast<std::size_t>(h)].origin)]);
        turn = sgn(e.x * dir.y - e.y * dir.x);
      }
      if (turn < 0) exit = Location{-1, hes[static_cast<std::size_t>(h)].twin};
    }
    for (std::size_t i = 0; i < ring.size() && !exit.has_value(); ++i) {
      if (sides[i] != 0) continue;
      const auto& a = verts[static_cast<std::size_t>(hes[static_cast<std::size_t>(ring[i])].origin)];
      Rat t = a.x * dir.x + a.y * dir.y;
      if (!best || t > *best) {
        best = std::move(t);
        loc = {hes[static_cast<std::size_t>(ring[i])].origin, -1};
      }
    }
    if (exit) loc = *exit;
    else if (!best) break;
  }
  return visited;
}

std::vector<SubproblemSpec> subproblems_of(const Dcel& d, std::span<const ExactLine> lines) {
  std::vector<int> face_slot(d.faces().size(), -1);
  std::vector<SubproblemSpec> out;
  for (std::size_t f = 0; f < d.faces().size(); ++f) {
    if (!d.faces()[f].bounded) continue;
    face_slot[f] = static_cast<int>(out.size());
    SubproblemSpec spec;
    spec.region = static_cast<int>(f);
    out.push_back(std::move(spec));
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (int f : faces_along_line(d, lines[i]))
      out[static_cast<std::size_t>(face_slot[static_cast<std::size_t>(f)])].objects.push_back(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------------------
// Envelopes

bool is_counter_clockwise(std::span<const ExactPoint> polygon) {
  Rat area2 = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = polygon[i];
    const auto& q = polygon[(i + 1) % n];
    area2 += p.x * q.y - p.y * q.x;
  }
  return sgn(area2) > 0;
}

Envelopes face_envelopes(std::span<const ExactPoint> boundary) {
  const std::size_t n = boundary.size();
  if (n < 3) throw std::invalid_argument("face_envelopes: need at least 3 vertices");
  std::vector<std::size_t> ccw(n);
  std::iota(ccw.begin(), ccw.end(), 0);
  if (!is_counter_clockwise(boundary)) std::reverse(ccw.begin(), ccw.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (geom::orient(boundary[ccw[i]], boundary[ccw[(i + 1) % n]], boundary[ccw[(i + 2) % n]]) < 0)
      throw std::logic_error("face_envelopes: polygon is not convex");
  }
  auto pick = [&](bool want_max_x, bool want_max_y) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const auto& p = boundary[ccw[i]];
      const auto& b = boundary[ccw[best]];
      bool better_x = want_max_x ? p.x > b.x : p.x < b.x;
      bool better_y = want_max_y ? p.y > b.y : p.y < b.y;
      if (better_x || (p.x == b.x && better_y)) best = i;
    }
    return best;
  };
  std::size_t left_top = pick(false, true), left_bottom = pick(false, false);
  std::size_t right_top = pick(true, true), right_bottom = pick(true, false);
  Envelopes env;
  for (std::size_t i = right_top;; i = (i + 1) % n) {
    env.upper.push_back(ccw[i]);
    if (i == left_top) break;
  }
  std::reverse(env.upper.begin(), env.upper.end());
  for (std::size_t i = left_bottom;; i = (i + 1) % n) {
    env.lower.push_back(ccw[i]);
    if (i == right_bottom) break;
  }
  return env;
}

}  // namespace rqs::arr
