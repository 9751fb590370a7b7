#include "rqs/curved.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rqs::curved {

namespace {

constexpr double kCornerSlack = 1e-7;
// Abscissae of arcs near their horizontal tangents lose about half the digits of y, so
// gaps meeting at such a point are compared with this looser slack.
constexpr double kContactSlack = 1e-6;

double dist(const ApproxPoint& p, const ApproxPoint& q) { return std::hypot(p.x - q.x, p.y - q.y); }

bool on_piece(const ArcOrSeg& s, const ApproxPoint& p) {
  if (p.y < s.a.y - kTolerance || p.y > s.b.y + kTolerance) return false;
  if (s.kind == PieceKind::Arc) {
    if (s.side * (p.x - s.center.x) < -kTolerance) return false;
    return std::abs(dist(p, s.center) - 1.0) <= 1e-7;
  }
  return dist(p, s.nearest(p)) <= 1e-7;
}

std::vector<ApproxPoint> piece_intersections(const ArcOrSeg& p, const ArcOrSeg& q) {
  std::vector<ApproxPoint> out;
  if (p.kind == PieceKind::Arc) {
    if (q.kind == PieceKind::Arc && dist(p.center, q.center) <= kTolerance) return out;
    for (const auto& x : q.meet_circle(p.center))
      if (on_piece(p, x)) out.push_back(x);
    return out;
  }
  if (q.kind == PieceKind::Arc) return piece_intersections(q, p);
  // Two segments.
  const double d1x = p.b.x - p.a.x, d1y = p.b.y - p.a.y;
  const double d2x = q.b.x - q.a.x, d2y = q.b.y - q.a.y;
  const double den = d1x * d2y - d1y * d2x;
  if (std::abs(den) <= 1e-15) return out;
  const double s = ((q.a.x - p.a.x) * d2y - (q.a.y - p.a.y) * d2x) / den;
  const double t = ((q.a.x - p.a.x) * d1y - (q.a.y - p.a.y) * d1x) / den;
  if (s < -1e-12 || s > 1 + 1e-12 || t < -1e-12 || t > 1 + 1e-12) return out;
  out.push_back({p.a.x + s * d1x, p.a.y + s * d1y});
  return out;
}

}  // namespace

Rect disk_bbox(std::span<const UnitDisk> disks, double margin) {
  if (disks.empty()) return {-1, -1, 1, 1};
  Rect r{disks[0].center.x, disks[0].center.y, disks[0].center.x, disks[0].center.y};
  for (const auto& d : disks) {
    r.xmin = std::min(r.xmin, d.center.x);
    r.ymin = std::min(r.ymin, d.center.y);
    r.xmax = std::max(r.xmax, d.center.x);
    r.ymax = std::max(r.ymax, d.center.y);
  }
  const double grow = 1.0 + margin;
  return {r.xmin - grow, r.ymin - grow, r.xmax + grow, r.ymax + grow};
}

// ---------------------------------------------------------------------------
// ArcOrSeg

ArcOrSeg ArcOrSeg::arc(int disk, ApproxPoint center, int side, double y0, double y1) {
  ArcOrSeg s;
  s.kind = PieceKind::Arc;
  s.disk = disk;
  s.center = center;
  s.side = side;
  if (y0 > y1) std::swap(y0, y1);
  s.a = {0, y0};
  s.b = {0, y1};
  s.a.x = s.x_at(y0);
  s.b.x = s.x_at(y1);
  return s;
}

ArcOrSeg ArcOrSeg::segment(int disk, ApproxPoint a, ApproxPoint b) {
  ArcOrSeg s;
  s.disk = disk;
  if (b.y < a.y || (b.y == a.y && b.x < a.x)) std::swap(a, b);
  s.a = a;
  s.b = b;
  return s;
}

double ArcOrSeg::x_at(double y) const {
  y = std::clamp(y, a.y, b.y);
  if (kind == PieceKind::Arc) {
    const double dy = y - center.y;
    return center.x + side * std::sqrt(std::max(0.0, 1.0 - dy * dy));
  }
  if (b.y == a.y) return a.x;
  return a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
}

ArcOrSeg ArcOrSeg::clipped(double y0, double y1) const {
  if (horizontal()) return *this;
  y0 = std::max(y0, a.y);
  y1 = std::min(y1, b.y);
  if (kind == PieceKind::Arc) return arc(disk, center, side, y0, y1);
  return segment(disk, {x_at(y0), y0}, {x_at(y1), y1});
}

std::vector<ApproxPoint> ArcOrSeg::meet_circle(const ApproxPoint& c) const {
  std::vector<ApproxPoint> out;
  if (kind == PieceKind::Arc) {
    if (dist(center, c) <= kTolerance) return out;
    for (const auto& p : geom::circle_circle_intersections(center, c, 1.0))
      if (on_piece(*this, p)) out.push_back(p);
    return out;
  }
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double fx = a.x - c.x, fy = a.y - c.y;
  const double qa = dx * dx + dy * dy;
  if (qa == 0) return out;
  const double qb = 2 * (fx * dx + fy * dy);
  const double qc = fx * fx + fy * fy - 1.0;
  double disc = qb * qb - 4 * qa * qc;
  const double len = std::sqrt(qa);
  // Tangency within tolerance: the line's distance to c is within kTolerance of 1.
  const double line_dist = std::abs(fx * dy - fy * dx) / len;
  std::vector<double> ts;
  if (std::abs(line_dist - 1.0) <= kTolerance) {
    ts.push_back(-qb / (2 * qa));
  } else if (disc > 0) {
    disc = std::sqrt(disc);
    ts.push_back((-qb - disc) / (2 * qa));
    ts.push_back((-qb + disc) / (2 * qa));
  }
  const double slack = kTolerance / len;
  for (double t : ts)
    if (t >= -slack && t <= 1 + slack) out.push_back({a.x + std::clamp(t, 0.0, 1.0) * dx, a.y + std::clamp(t, 0.0, 1.0) * dy});
  return out;
}

ApproxPoint ArcOrSeg::nearest(const ApproxPoint& p) const {
  if (kind == PieceKind::Segment) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double l2 = dx * dx + dy * dy;
    if (l2 == 0) return a;
    const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / l2, 0.0, 1.0);
    return {a.x + t * dx, a.y + t * dy};
  }
  const double vx = p.x - center.x, vy = p.y - center.y;
  const double r = std::hypot(vx, vy);
  if (r <= kTolerance) return at_param((a.y + b.y) / 2);
  ApproxPoint u{center.x + vx / r, center.y + vy / r};
  if (u.y >= a.y && u.y <= b.y && side * vx >= 0) return u;
  return dist(p, a) <= dist(p, b) ? a : b;
}

ApproxPoint ArcOrSeg::farthest(const ApproxPoint& p) const {
  if (kind == PieceKind::Arc) {
    const double vx = p.x - center.x, vy = p.y - center.y;
    const double r = std::hypot(vx, vy);
    if (r > kTolerance) {
      ApproxPoint u{center.x - vx / r, center.y - vy / r};
      if (u.y >= a.y && u.y <= b.y && side * vx <= 0) return u;
    }
  }
  return dist(p, a) >= dist(p, b) ? a : b;
}

// ---------------------------------------------------------------------------
// CurvedCell

std::vector<ArcOrSeg> CurvedCell::boundary() const {
  std::vector<ArcOrSeg> out{left, right};
  const double xb0 = left.x_at(y_bottom), xb1 = right.x_at(y_bottom);
  const double xt0 = left.x_at(y_top), xt1 = right.x_at(y_top);
  if (xb1 - xb0 > kTolerance) out.push_back(ArcOrSeg::segment(-1, {xb0, y_bottom}, {xb1, y_bottom}));
  if (xt1 - xt0 > kTolerance) out.push_back(ArcOrSeg::segment(-1, {xt0, y_top}, {xt1, y_top}));
  return out;
}

std::size_t CurvedCell::arc_count() const { return 2; }

std::size_t CurvedCell::segment_count() const { return boundary().size() - 2; }

std::array<ApproxPoint, 4> CurvedCell::corners() const {
  return {ApproxPoint{left.x_at(y_bottom), y_bottom}, ApproxPoint{right.x_at(y_bottom), y_bottom},
          ApproxPoint{right.x_at(y_top), y_top}, ApproxPoint{left.x_at(y_top), y_top}};
}

bool CurvedCell::contains(const ApproxPoint& p, double tol) const {
  if (p.y < y_bottom - tol || p.y > y_top + tol) return false;
  const double y = std::clamp(p.y, y_bottom, y_top);
  return left.x_at(y) - tol <= p.x && p.x <= right.x_at(y) + tol;
}

ApproxPoint CurvedCell::interior_point() const {
  const double y = (y_bottom + y_top) / 2;
  return {(left.x_at(y) + right.x_at(y)) / 2, y};
}

Rect CurvedCell::bounds() const {
  return {std::min(left.a.x, left.b.x), y_bottom, std::max(right.a.x, right.b.x), y_top};
}

double CurvedCell::area(int steps) const {
  if (steps % 2) ++steps;
  const double h = (y_top - y_bottom) / steps;
  auto width = [&](double y) { return right.x_at(y) - left.x_at(y); };
  double s = width(y_bottom) + width(y_top);
  for (int i = 1; i < steps; ++i) s += width(y_bottom + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

struct Gap {
  int left;
  int right;
};

struct Sweep {
  std::vector<ArcOrSeg> curves;
  std::vector<double> events;
  std::vector<std::vector<std::pair<double, double>>> obstacles;  // per event
  std::vector<std::vector<Gap>> gaps;                             // per slab [events[s], events[s+1]]
};

std::size_t event_index(const std::vector<double>& events, double y) {
  auto it = std::lower_bound(events.begin(), events.end(), y - 1e-9);
  if (it == events.end()) return events.size() - 1;
  return static_cast<std::size_t>(it - events.begin());
}

Sweep run_sweep(std::span<const ArcOrSeg> pieces, bool region_only) {
  Sweep sw;
  std::vector<ArcOrSeg> flats;
  for (const auto& p : pieces) (p.horizontal() ? flats : sw.curves).push_back(p);

  std::vector<ApproxPoint> vertices;
  std::vector<double> ys;
  for (const auto& p : pieces) {
    vertices.push_back(p.a);
    vertices.push_back(p.b);
  }
  for (std::size_t i = 0; i < sw.curves.size(); ++i)
    for (std::size_t j = i + 1; j < sw.curves.size(); ++j)
      for (const auto& x : piece_intersections(sw.curves[i], sw.curves[j])) vertices.push_back(x);
  for (const auto& v : vertices) ys.push_back(v.y);
  std::sort(ys.begin(), ys.end());
  for (double y : ys)
    if (sw.events.empty() || y - sw.events.back() > 1e-9) sw.events.push_back(y);
  if (sw.events.size() < 2) return sw;

  sw.obstacles.assign(sw.events.size(), {});
  for (const auto& v : vertices) sw.obstacles[event_index(sw.events, v.y)].emplace_back(v.x, v.x);
  for (const auto& f : flats) sw.obstacles[event_index(sw.events, f.a.y)].emplace_back(f.a.x, f.b.x);

  sw.gaps.resize(sw.events.size() - 1);
  std::vector<int> order;
  for (std::size_t s = 0; s + 1 < sw.events.size(); ++s) {
    const double mid = (sw.events[s] + sw.events[s + 1]) / 2;
    order.clear();
    std::vector<double> xs(sw.curves.size());
    for (std::size_t i = 0; i < sw.curves.size(); ++i) {
      if (sw.curves[i].a.y < mid && mid < sw.curves[i].b.y) {
        order.push_back(static_cast<int>(i));
        xs[i] = sw.curves[i].x_at(mid);
      }
    }
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      if (xs[static_cast<std::size_t>(i)] != xs[static_cast<std::size_t>(j)])
        return xs[static_cast<std::size_t>(i)] < xs[static_cast<std::size_t>(j)];
      return i < j;
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      if (region_only && i % 2 == 1) continue;
      const int l = order[i], r = order[i + 1];
      if (xs[static_cast<std::size_t>(r)] - xs[static_cast<std::size_t>(l)] <= kTolerance) continue;
      sw.gaps[s].push_back({l, r});
    }
  }
  return sw;
}

bool blocked(const Sweep& sw, std::size_t event, double xl, double xr) {
  for (const auto& [o0, o1] : sw.obstacles[event])
    if (o1 >= xl - kTolerance && o0 <= xr + kTolerance) return true;
  return false;
}

std::vector<CurvedCell> trapezoids(const Sweep& sw) {
  std::vector<CurvedCell> cells;
  std::map<std::pair<int, int>, std::size_t> open, next;
  for (std::size_t s = 0; s < sw.gaps.size(); ++s) {
    const double lo = sw.events[s], hi = sw.events[s + 1];
    next.clear();
    for (const auto& g : sw.gaps[s]) {
      const auto& L = sw.curves[static_cast<std::size_t>(g.left)];
      const auto& R = sw.curves[static_cast<std::size_t>(g.right)];
      auto it = open.find({g.left, g.right});
      if (it != open.end() && !blocked(sw, s, L.x_at(lo), R.x_at(lo))) {
        cells[it->second].y_top = hi;
        next[{g.left, g.right}] = it->second;
        continue;
      }
      CurvedCell c;
      c.y_bottom = lo;
      c.y_top = hi;
      c.left = L;
      c.right = R;
      next[{g.left, g.right}] = cells.size();
      cells.push_back(std::move(c));
    }
    std::swap(open, next);
  }
  for (auto& c : cells) {
    c.left = c.left.clipped(c.y_bottom, c.y_top);
    c.right = c.right.clipped(c.y_bottom, c.y_top);
  }
  return cells;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<ArcOrSeg> quarter_arcs(int id, const ApproxPoint& c) {
  return {ArcOrSeg::arc(id, c, 1, c.y - 1, c.y), ArcOrSeg::arc(id, c, 1, c.y, c.y + 1),
          ArcOrSeg::arc(id, c, -1, c.y - 1, c.y), ArcOrSeg::arc(id, c, -1, c.y, c.y + 1)};
}

std::vector<ArcOrSeg> box_outline(const Rect& b) {
  return {ArcOrSeg::segment(-1, {b.xmin, b.ymin}, {b.xmin, b.ymax}), ArcOrSeg::segment(-1, {b.xmax, b.ymin}, {b.xmax, b.ymax}),
          ArcOrSeg::segment(-1, {b.xmin, b.ymin}, {b.xmax, b.ymin}), ArcOrSeg::segment(-1, {b.xmin, b.ymax}, {b.xmax, b.ymax})};
}

}  // namespace

DiskArrangement build_disk_arrangement(std::span<const UnitDisk> disks, std::span<const int> sample, const Rect& box) {
  DiskArrangement arr;
  arr.box = box;
  arr.sample.assign(sample.begin(), sample.end());
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j)
      if (dist(disks[static_cast<std::size_t>(sample[i])].center, disks[static_cast<std::size_t>(sample[j])].center) <= kTolerance)
        throw std::invalid_argument("duplicate disks " + std::to_string(sample[i]) + " and " + std::to_string(sample[j]));
  for (int id : sample) {
    const auto& c = disks[static_cast<std::size_t>(id)].center;
    if (c.x - 1 < box.xmin || c.x + 1 > box.xmax || c.y - 1 < box.ymin || c.y + 1 > box.ymax)
      throw std::invalid_argument("disk " + std::to_string(id) + " leaves the box");
    for (auto& a : quarter_arcs(id, c)) arr.circles.push_back(a);
  }
  std::vector<ArcOrSeg> pieces = arr.circles;
  for (auto& s : box_outline(box)) pieces.push_back(s);
  Sweep sw = run_sweep(pieces, false);

  // Every gap of every slab is a piece of some face; glue gaps that share a stretch of event line.
  std::vector<std::pair<std::size_t, std::size_t>> ids;  // (slab, gap)
  std::vector<std::size_t> first(sw.gaps.size() + 1, 0);
  for (std::size_t s = 0; s < sw.gaps.size(); ++s) {
    first[s + 1] = first[s] + sw.gaps[s].size();
    for (std::size_t g = 0; g < sw.gaps[s].size(); ++g) ids.emplace_back(s, g);
  }
  UnionFind uf(ids.size());
  for (std::size_t s = 1; s < sw.gaps.size(); ++s) {
    const double y = sw.events[s];
    const auto& below = sw.gaps[s - 1];
    const auto& above = sw.gaps[s];
    std::size_t i = 0, j = 0;
    while (i < below.size() && j < above.size()) {
      const double bl = sw.curves[static_cast<std::size_t>(below[i].left)].x_at(y);
      const double br = sw.curves[static_cast<std::size_t>(below[i].right)].x_at(y);
      const double al = sw.curves[static_cast<std::size_t>(above[j].left)].x_at(y);
      const double ar = sw.curves[static_cast<std::size_t>(above[j].right)].x_at(y);
      if (std::min(br, ar) - std::max(bl, al) > kContactSlack) uf.unite(first[s - 1] + i, first[s] + j);
      if (br < ar) ++i; else ++j;
    }
  }
  std::map<std::size_t, std::size_t> face_of_root;
  for (std::size_t n = 0; n < ids.size(); ++n) {
    auto [s, g] = ids[n];
    std::size_t root = uf.find(n);
    auto [it, inserted] = face_of_root.try_emplace(root, arr.faces.size());
    if (inserted) arr.faces.emplace_back();
    CurvedCell c;
    c.y_bottom = sw.events[s];
    c.y_top = sw.events[s + 1];
    c.left = sw.curves[static_cast<std::size_t>(sw.gaps[s][g].left)].clipped(c.y_bottom, c.y_top);
    c.right = sw.curves[static_cast<std::size_t>(sw.gaps[s][g].right)].clipped(c.y_bottom, c.y_top);
    arr.faces[it->second].push_back(std::move(c));
  }
  return arr;
}

std::vector<ArcOrSeg> pseudoline_refine(const DiskArrangement& arrangement) {
  std::vector<ArcOrSeg> out = arrangement.circles;
  if (arrangement.sample.empty()) return out;
  const Rect& b = arrangement.box;
  for (std::size_t i = 0; i < arrangement.circles.size(); i += 4) {
    const auto& c = arrangement.circles[i].center;
    const int id = arrangement.circles[i].disk;
    out.push_back(ArcOrSeg::segment(id, {c.x - 1, b.ymin}, {c.x - 1, b.ymax}));
    out.push_back(ArcOrSeg::segment(id, {c.x + 1, b.ymin}, {c.x + 1, b.ymax}));
    out.push_back(ArcOrSeg::segment(id, {b.xmin, c.y - 1}, {b.xmax, c.y - 1}));
    out.push_back(ArcOrSeg::segment(id, {b.xmin, c.y + 1}, {b.xmax, c.y + 1}));
    out.push_back(ArcOrSeg::segment(id, {c.x, c.y - 1}, {c.x, c.y + 1}));
    out.push_back(ArcOrSeg::segment(id, {c.x - 1, c.y}, {c.x + 1, c.y}));
  }
  for (auto& s : box_outline(b)) out.push_back(s);
  return out;
}

std::vector<CurvedCell> monotone_sweep_subdivide(std::span<const ArcOrSeg> pieces, bool region_only) {
  if (region_only) {
    // A closed boundary must not cross itself away from shared endpoints.
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        for (const auto& x : piece_intersections(pieces[i], pieces[j])) {
          auto is_end = [&](const ArcOrSeg& s) { return dist(x, s.a) <= 1e-7 || dist(x, s.b) <= 1e-7; };
          if (!is_end(pieces[i]) || !is_end(pieces[j])) throw std::invalid_argument("self-intersecting boundary");
        }
  }
  return trapezoids(run_sweep(pieces, region_only));
}

void classify_disks_per_cell(std::span<CurvedCell> cells, std::span<const UnitDisk> disks, std::span<const int> subset) {
  for (auto& cell : cells) {
    cell.covering = 0;
    cell.crossing.clear();
    const auto boundary = cell.boundary();
    const auto corners = cell.corners();
    for (int id : subset) {
      const auto& c = disks[static_cast<std::size_t>(id)].center;
      double far = 0;
      for (const auto& p : boundary) far = std::max(far, dist(c, p.farthest(c)));
      // Half the tolerance: points up to kTolerance / 4 outside the cell stay inside the disk.
      if (far <= 1 + kTolerance / 2) {
        ++cell.covering;
        continue;
      }
      if (cell.contains(c, 0.0)) {
        cell.crossing.push_back(id);
        continue;
      }
      double near = 1e300;
      ApproxPoint touch;
      for (const auto& p : boundary) {
        ApproxPoint t = p.nearest(c);
        if (double d = dist(c, t); d < near) {
          near = d;
          touch = t;
        }
      }
      if (near < 1 - kTolerance) {
        cell.crossing.push_back(id);
      } else if (near <= 1 + kTolerance) {
        bool at_corner = std::any_of(corners.begin(), corners.end(), [&](const ApproxPoint& k) { return dist(k, touch) <= kCornerSlack; });
        if (!at_corner) cell.crossing.push_back(id);
      }
    }
  }
}

int depth_at(const ApproxPoint& p, std::span<const UnitDisk> disks, std::span<const int> subset) {
  int d = 0;
  for (int id : subset)
    if (dist(p, disks[static_cast<std::size_t>(id)].center) <= 1 + kTolerance) ++d;
  return d;
}

bool near_degenerate(const UnitDisk& a, const UnitDisk& b) {
  const double d = dist(a.center, b.center);
  return d <= kTolerance || std::abs(d - 2.0) <= kTolerance;
}

std::vector<ApproxPoint> intersections(const ArcOrSeg& p, const ArcOrSeg& q) { return piece_intersections(p, q); }

}  // namespace rqs::curved
