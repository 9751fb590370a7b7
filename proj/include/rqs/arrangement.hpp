#pragma once

// Line arrangements as a doubly-connected edge list clipped to a rational box,
// their fan triangulations, zones, face envelopes, and per-face subproblems.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rqs/geom.hpp"
#include "rqs/subproblem.hpp"

namespace rqs::arr {

using geom::ExactLine;
using geom::ExactPoint;
using geom::Rat;

/// Carrier tags for edges that do not come from an input line.
inline constexpr int kSupport = -1;   // added by triangulation
inline constexpr int kBoundary = -2;  // clipping box

struct Box {
  Rat xmin, ymin, xmax, ymax;

  bool contains_strictly(const ExactPoint& p) const {
    return xmin < p.x && p.x < xmax && ymin < p.y && p.y < ymax;
  }
  std::vector<ExactPoint> corners() const {  // counter-clockwise from bottom-left
    return {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
  }
};

/// A box strictly containing every pairwise intersection with margin 1. Its y-range also
/// covers each non-vertical line over the x-range, so vertical segments between two lines
/// above the box's abscissae never leave it. Returns the unit box when nothing constrains it.
Box enclosing_bbox(std::span<const ExactLine> lines);

struct HalfEdge {
  int origin = -1;
  int twin = -1;
  int next = -1;
  int face = -1;
  int carrier = kBoundary;  // input-line id, kSupport or kBoundary
};

struct Face {
  int edge = -1;  // one boundary half-edge
  bool bounded = true;
};

struct EdgeSpec {
  int u = -1;
  int v = -1;
  int carrier = kBoundary;
};

class Dcel {
 public:
  Dcel() = default;

  /// Builds the subdivision from a connected straight-line plane graph.
  static Dcel from_edges(std::vector<ExactPoint> vertices, const std::vector<EdgeSpec>& edges);

  const std::vector<ExactPoint>& vertices() const { return vertices_; }
  /// Vertices rounded to binary64, for filtered predicates.
  const std::vector<geom::ApproxPoint>& approx() const { return approx_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Outgoing half-edges of v in counter-clockwise order.
  const std::vector<int>& outgoing(int v) const { return outgoing_[static_cast<std::size_t>(v)]; }

  int dest(int h) const { return half_edges_[static_cast<std::size_t>(half_edges_[static_cast<std::size_t>(h)].twin)].origin; }
  std::vector<int> face_half_edges(int f) const;
  std::vector<int> face_vertices(int f) const;
  std::vector<ExactPoint> face_polygon(int f) const;
  std::size_t bounded_face_count() const;
  std::size_t edge_count() const { return half_edges_.size() / 2; }
  /// Number of distinct non-collinear corners on a face boundary.
  std::size_t corner_count(int f) const;

  /// Checks twin/next/face consistency, simple bounded cycles and V - E + F = 2.
  /// Returns an empty string when valid, otherwise a description of the first violation.
  std::string audit() const;

 private:
  std::vector<ExactPoint> vertices_;
  std::vector<geom::ApproxPoint> approx_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> outgoing_;
};

/// Arrangement of `lines` clipped to `box`. Concurrent intersections merge into one vertex.
/// Throws std::invalid_argument on duplicate lines or when a line misses the box.
Dcel build_arrangement(std::span<const ExactLine> lines, const Box& box);

/// Fan-triangulates every bounded face from its lexicographically smallest corner.
/// Added diagonals carry kSupport.
Dcel triangulate(const Dcel& d);

/// True iff `line` meets the closed face `f` somewhere other than only at a vertex.
bool line_meets_face(const Dcel& d, int f, const ExactLine& line);

/// One spec per bounded face (region = face id) listing the lines of the naive predicate.
using CrossingPredicate = std::function<bool(int face, int object)>;
std::vector<SubproblemSpec> subproblems_of(const Dcel& d, std::size_t object_count, const CrossingPredicate& crosses);

/// Same result as the predicate form with line_meets_face, computed by walking each line
/// through the subdivision instead of testing every face.
std::vector<SubproblemSpec> subproblems_of(const Dcel& d, std::span<const ExactLine> lines);

/// Faces crossed by one line, in walking order (closed faces minus vertex-only contacts).
std::vector<int> faces_along_line(const Dcel& d, const ExactLine& line);

/// Convex polygon with the carrier of each edge v[i] -> v[i+1].
struct FacePolygon {
  std::vector<ExactPoint> vertices;  // counter-clockwise
  std::vector<int> carriers;
};

struct Zone {
  ExactLine line;
  std::vector<FacePolygon> faces;

  /// Boundary edges carried by input lines, summed over faces.
  std::size_t edge_count() const;
};

/// Faces of the arrangement of `lines` whose closure meets `line`, each clipped to the box.
/// Every face is cut out directly by its half-planes; the full arrangement is never built.
Zone zone_of_line(std::span<const ExactLine> lines, const ExactLine& line, const Box& box);
Zone zone_of_line(std::span<const ExactLine> lines, const ExactLine& line);
/// The same zone read off an already built (untriangulated) arrangement: faces the line walks
/// through plus every face around an arrangement vertex on the line.
Zone zone_in_arrangement(const Dcel& arrangement, const ExactLine& line);

/// Upper and lower chains of a convex polygon, as indices into `boundary` sorted by x.
/// Both chains start at the leftmost and end at the rightmost vertices.
struct Envelopes {
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
};
Envelopes face_envelopes(std::span<const ExactPoint> boundary);

/// Sorts points of the same face into counter-clockwise order when needed.
bool is_counter_clockwise(std::span<const ExactPoint> polygon);

}  // namespace rqs::arr
