#pragma once

// Versioned JSON instance files, result payloads and best-effort SVG pictures.
// Numbers in instance files are decimal strings ("3", "-1/7", "0.125") or JSON integers.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rqs/arrangement.hpp"
#include "rqs/curved.hpp"
#include "rqs/engine.hpp"
#include "rqs/instances.hpp"

namespace rqs::io {

using json = nlohmann::json;

/// Malformed or invalid input. Parse failures carry "line L, column C" in the message.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses text and checks "format": 1.
json parse_document(const std::string& text);
json read_document(const std::string& path);

geom::Rat rat_of(const json& v);
double real_of(const json& v);

/// {"lines": [[a, b, c], ...]} for lines a*x + b*y = c.
std::vector<geom::ExactLine> read_lines(const json& doc);
/// {"points": [[x, y], ...], "area_bound": q}; the override replaces q.
problems::TriangleInstance read_triangle(const json& doc, const std::optional<std::string>& area_bound);
/// {"points": [[x, y], ...], "depth_target": q}.
problems::DiskInstance read_disks(const json& doc, std::optional<int> depth_target);
/// {"P": [[lo, hi], ...], "Q": [...]}.
problems::IntervalInstance read_intervals(const json& doc);
/// {"n": n, "marked": [[i, j], ...]}: a pair table with a unit-cost lookup.
problems::PairSearchInstance read_pair_table(const json& doc);
/// {"vertices": [[x, y], ...], "edge": e, "pieces": K}.
problems::PolygonInstance read_polygon(const json& doc, std::optional<int> pieces);
/// {"polygons": [[[x, y], ...], ...]}.
problems::ProjectionInstance read_projection(const json& doc);

json rat_json(const geom::Rat& r);
json to_json(const Witness& w);
json to_json(const QueryLedger& l);
json to_json(const RqsParams& p);

/// Two-space indented dump with a trailing newline; keys come out sorted.
std::string render(const json& j);

/// Faces filled by the number of objects each one lists.
std::string svg_dcel(const arr::Dcel& d, const std::vector<SubproblemSpec>& specs);
/// Cells filled by their crossing counts, sampled circles drawn on top.
std::string svg_cells(const std::vector<curved::CurvedCell>& cells, const std::vector<geom::ApproxPoint>& circles);
/// Polygons as outlines, an optional line drawn across them.
std::string svg_polygons(const std::vector<std::vector<geom::ExactPoint>>& polygons, const std::optional<geom::ExactLine>& line);
/// P and Q as bars on two rows, P shifted by t when given.
std::string svg_intervals(const problems::IntervalInstance& inst, const std::optional<geom::Rat>& t);

}  // namespace rqs::io
