#include "rqs/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "rqs/experiments.hpp"

namespace rqs::io {

namespace {

using geom::ExactPoint;
using geom::Rat;

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

const json& array_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw InputError(std::string("field \"") + name + "\" must be an array");
  return v;
}

ExactPoint point_of(const json& v) {
  if (!v.is_array() || v.size() != 2) throw InputError("a point must be [x, y]");
  return {rat_of(v[0]), rat_of(v[1])};
}

std::vector<ExactPoint> points_of(const json& arr) {
  if (!arr.is_array()) throw InputError("expected a list of points");
  std::vector<ExactPoint> out;
  for (const auto& p : arr) out.push_back(point_of(p));
  return out;
}

int int_of(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

/// Maps a world rectangle onto a 800-pixel-wide picture with y pointing up.
struct Canvas {
  double xmin, ymin, scale, height;

  Canvas(double x0, double y0, double x1, double y1) : xmin(x0), ymin(y0) {
    const double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    scale = 800.0 / std::max(w, h);
    height = h * scale;
  }
  std::string xy(double x, double y) const { return num((x - xmin) * scale) + "," + num(height - (y - ymin) * scale); }
  std::string open() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" + num(height) + "\" viewBox=\"0 0 800 " +
           num(height) + "\">\n<rect width=\"800\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
  }
};

/// White for 0, deep red for the maximum.
std::string heat(std::size_t v, std::size_t max) {
  const int g = max == 0 ? 255 : static_cast<int>(255 - 200.0 * static_cast<double>(v) / static_cast<double>(max));
  return "rgb(255," + std::to_string(g) + "," + std::to_string(g) + ")";
}

}  // namespace

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != 1) throw InputError("expected \"format\": 1");
  return doc;
}

json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

Rat rat_of(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) {
    try {
      return geom::parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("not a number: \"" + v.get<std::string>() + "\"");
    }
  }
  throw InputError("exact coordinates must be decimal strings or integers");
}

double real_of(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    std::size_t used = 0;
    double d = 0;
    try {
      d = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("not a number: \"" + s + "\"");
    return d;
  }
  throw InputError("expected a number");
}

std::vector<geom::ExactLine> read_lines(const json& doc) {
  std::vector<geom::ExactLine> out;
  for (const auto& l : array_field(doc, "lines")) {
    if (!l.is_array() || l.size() != 3) throw InputError("a line must be [a, b, c] for a*x + b*y = c");
    try {
      out.emplace_back(rat_of(l[0]), rat_of(l[1]), rat_of(l[2]));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

problems::TriangleInstance read_triangle(const json& doc, const std::optional<std::string>& area_bound) {
  problems::TriangleInstance inst;
  inst.points = points_of(array_field(doc, "points"));
  const Rat q = area_bound ? rat_of(json(*area_bound)) : rat_of(field(doc, "area_bound"));
  if (sgn(q) < 0) throw InputError("area bound must be nonnegative");
  inst.area_bound2 = 2 * q;
  return inst;
}

problems::DiskInstance read_disks(const json& doc, std::optional<int> depth_target) {
  problems::DiskInstance inst;
  for (const auto& p : array_field(doc, "points")) {
    if (!p.is_array() || p.size() != 2) throw InputError("a point must be [x, y]");
    inst.points.push_back({real_of(p[0]), real_of(p[1])});
  }
  inst.depth_target = depth_target ? *depth_target : int_of(field(doc, "depth_target"), "depth_target");
  return inst;
}

problems::IntervalInstance read_intervals(const json& doc) {
  problems::IntervalInstance inst;
  for (const char* side : {"P", "Q"})
    for (const auto& iv : array_field(doc, side)) {
      if (!iv.is_array() || iv.size() != 2) throw InputError("an interval must be [lo, hi]");
      (side[0] == 'P' ? inst.P : inst.Q).push_back({rat_of(iv[0]), rat_of(iv[1])});
    }
  return inst;
}

problems::PairSearchInstance read_pair_table(const json& doc) {
  const int n = int_of(field(doc, "n"), "n");
  if (n < 2) throw InputError("n must be at least 2");
  auto marked = std::make_shared<std::set<std::pair<int, int>>>();
  for (const auto& m : array_field(doc, "marked")) {
    if (!m.is_array() || m.size() != 2) throw InputError("a marked pair must be [i, j]");
    const int i = int_of(m[0], "pair index"), j = int_of(m[1], "pair index");
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw InputError("marked pair out of range");
    marked->insert({i, j});
  }
  problems::PairSearchInstance inst;
  inst.n = static_cast<std::size_t>(n);
  inst.check = [marked](int i, int j, QueryLedger& cost) -> std::optional<PairWitness> {
    cost.classical_ops += 1;
    if (marked->count({i, j})) return PairWitness{i, j, std::nullopt, std::nullopt};
    return std::nullopt;
  };
  inst.accept = [marked](const PairWitness& w) { return marked->count({w.i, w.j}) > 0; };
  return inst;
}

problems::PolygonInstance read_polygon(const json& doc, std::optional<int> pieces) {
  problems::PolygonInstance inst;
  inst.vertices = points_of(array_field(doc, "vertices"));
  inst.edge = int_of(field(doc, "edge"), "edge");
  inst.pieces = pieces ? *pieces : int_of(field(doc, "pieces"), "pieces");
  return inst;
}

problems::ProjectionInstance read_projection(const json& doc) {
  problems::ProjectionInstance inst;
  for (const auto& poly : array_field(doc, "polygons")) inst.polygons.push_back(points_of(poly));
  return inst;
}

json rat_json(const Rat& r) { return geom::to_string(r); }

json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PointWitness>) {
          return {{"kind", "point"}, {"point", {rat_json(v.point.x), rat_json(v.point.y)}}, {"lines", v.lines}};
        } else if constexpr (std::is_same_v<T, TriangleWitness>) {
          return {{"kind", "triangle"}, {"points", v.points}, {"area2", rat_json(v.area2)}};
        } else if constexpr (std::is_same_v<T, DiskWitness>) {
          return {{"kind", "disk"}, {"point", {exp::fixed12(v.point.x), exp::fixed12(v.point.y)}}, {"depth", v.depth}};
        } else if constexpr (std::is_same_v<T, TranslationWitness>) {
          return {{"kind", "translation"}, {"t", rat_json(v.t)}};
        } else {
          json j = {{"kind", "pair"}, {"i", v.i}, {"j", v.j}};
          if (v.line) j["line"] = {rat_json(v.line->a()), rat_json(v.line->b()), rat_json(v.line->c())};
          if (v.direction) j["direction"] = {rat_json(v.direction->x), rat_json(v.direction->y)};
          return j;
        }
      },
      w);
}

json to_json(const QueryLedger& l) {
  return {{"classical_ops", l.classical_ops},
          {"grover_queries", l.grover_queries},
          {"amplification_invocations", l.amplification_invocations},
          {"total", l.total()}};
}

json to_json(const RqsParams& p) {
  return {{"n0", p.n0},
          {"epsilon", exp::fixed12(p.epsilon)},
          {"delta", exp::fixed12(p.delta)},
          {"c3", exp::fixed12(p.c3)},
          {"alpha", exp::fixed12(p.alpha)},
          {"k", p.k},
          {"base_threshold", p.base_threshold},
          {"c_amp", exp::fixed12(p.c_amp)}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

std::string svg_dcel(const arr::Dcel& d, const std::vector<SubproblemSpec>& specs) {
  const auto& pts = d.approx();
  if (pts.empty()) return Canvas(0, 0, 1, 1).open() + "</svg>\n";
  double x0 = pts[0].x, x1 = x0, y0 = pts[0].y, y1 = y0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Canvas c(x0, y0, x1, y1);
  std::size_t max = 0;
  for (const auto& s : specs) max = std::max(max, s.size());
  std::string out = c.open();
  for (const auto& s : specs) {
    out += "<polygon fill=\"" + heat(s.size(), max) + "\" stroke=\"black\" stroke-width=\"0.3\" points=\"";
    for (int v : d.face_vertices(s.region)) out += c.xy(pts[static_cast<std::size_t>(v)].x, pts[static_cast<std::size_t>(v)].y) + " ";
    out += "\"><title>" + std::to_string(s.size()) + "</title></polygon>\n";
  }
  return out + "</svg>\n";
}

std::string svg_cells(const std::vector<curved::CurvedCell>& cells, const std::vector<geom::ApproxPoint>& circles) {
  if (cells.empty()) return Canvas(0, 0, 1, 1).open() + "</svg>\n";
  curved::Rect b = cells[0].bounds();
  for (const auto& cell : cells) {
    const auto r = cell.bounds();
    b = {std::min(b.xmin, r.xmin), std::min(b.ymin, r.ymin), std::max(b.xmax, r.xmax), std::max(b.ymax, r.ymax)};
  }
  Canvas c(b.xmin, b.ymin, b.xmax, b.ymax);
  std::size_t max = 0;
  for (const auto& cell : cells) max = std::max(max, cell.crossing.size());
  std::string out = c.open();
  constexpr int kSteps = 12;
  for (const auto& cell : cells) {
    out += "<polygon fill=\"" + heat(cell.crossing.size(), max) + "\" stroke=\"gray\" stroke-width=\"0.3\" points=\"";
    const double h = cell.y_top - cell.y_bottom;
    for (int i = 0; i <= kSteps; ++i) {
      const double y = cell.y_bottom + h * i / kSteps;
      out += c.xy(cell.left.x_at(y), y) + " ";
    }
    for (int i = kSteps; i >= 0; --i) {
      const double y = cell.y_bottom + h * i / kSteps;
      out += c.xy(cell.right.x_at(y), y) + " ";
    }
    out += "\"/>\n";
  }
  for (const auto& p : circles)
    out += "<circle cx=\"" + num((p.x - c.xmin) * c.scale) + "\" cy=\"" + num(c.height - (p.y - c.ymin) * c.scale) + "\" r=\"" +
           num(c.scale) + "\" fill=\"none\" stroke=\"blue\" stroke-width=\"1\"/>\n";
  return out + "</svg>\n";
}

std::string svg_polygons(const std::vector<std::vector<ExactPoint>>& polygons, const std::optional<geom::ExactLine>& line) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const auto& poly : polygons)
    for (const auto& p : poly) {
      const double x = p.x.get_d(), y = p.y.get_d();
      x0 = first ? x : std::min(x0, x);
      x1 = first ? x : std::max(x1, x);
      y0 = first ? y : std::min(y0, y);
      y1 = first ? y : std::max(y1, y);
      first = false;
    }
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0) + 1e-9;
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  Canvas c(x0, y0, x1, y1);
  std::string out = c.open();
  for (const auto& poly : polygons) {
    out += "<polygon fill=\"rgb(220,230,255)\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& p : poly) out += c.xy(p.x.get_d(), p.y.get_d()) + " ";
    out += "\"/>\n";
  }
  if (line) {
    const double a = line->a().get_d(), b = line->b().get_d(), k = line->c().get_d();
    std::string ends;
    if (std::abs(b) > std::abs(a)) {
      ends = c.xy(x0, (k - a * x0) / b) + " " + c.xy(x1, (k - a * x1) / b);
    } else {
      ends = c.xy((k - b * y0) / a, y0) + " " + c.xy((k - b * y1) / a, y1);
    }
    out += "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" points=\"" + ends + "\"/>\n";
  }
  return out + "</svg>\n";
}

std::string svg_intervals(const problems::IntervalInstance& inst, const std::optional<Rat>& t) {
  const double shift = t ? t->get_d() : 0.0;
  double x0 = 0, x1 = 1;
  bool first = true;
  auto grow = [&](double v) {
    x0 = first ? v : std::min(x0, v);
    x1 = first ? v : std::max(x1, v);
    first = false;
  };
  for (const auto& iv : inst.Q) {
    grow(iv.lo.get_d());
    grow(iv.hi.get_d());
  }
  for (const auto& iv : inst.P) {
    grow(iv.lo.get_d() + shift);
    grow(iv.hi.get_d() + shift);
  }
  Canvas c(x0 - 1, 0, x1 + 1, 3);
  std::string out = c.open();
  auto bar = [&](const problems::Interval& iv, double dx, double y, const char* color) {
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"6\" points=\"" +
           c.xy(iv.lo.get_d() + dx, y) + " " + c.xy(iv.hi.get_d() + dx, y) + "\"/>\n";
  };
  for (const auto& iv : inst.Q) bar(iv, 0, 1, "black");
  for (const auto& iv : inst.P) bar(iv, shift, 2, "red");
  return out + "</svg>\n";
}

}  // namespace rqs::io
