#pragma once

// Problem instances and their solution checks. Nothing here depends on the search engine.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rqs/geom.hpp"
#include "rqs/ledger.hpp"
#include "rqs/witness.hpp"

namespace rqs::problems {

using geom::ApproxPoint;
using geom::ExactLine;
using geom::ExactPoint;
using geom::Rat;

struct TriangleInstance {
  std::vector<ExactPoint> points;
  Rat area_bound2;  // twice the area bound

  void validate() const;
};

struct DiskInstance {
  std::vector<ApproxPoint> points;
  int depth_target = 1;

  void validate() const;
};

struct Interval {
  Rat lo;
  Rat hi;
};

struct IntervalInstance {
  std::vector<Interval> P;
  std::vector<Interval> Q;

  /// Both sets sorted, pairwise disjoint, lo <= hi.
  void validate() const;
};

/// True iff every interval of P shifted by t lies inside some interval of Q.
bool check_translation(const IntervalInstance& inst, const Rat& t);

/// Pair predicate; charges its own cost to the ledger and returns the witness detail on success.
using PairCheck = std::function<std::optional<PairWitness>(int i, int j, QueryLedger& cost)>;

struct PairSearchInstance {
  std::size_t n = 0;
  PairCheck check;
  double beta = 0.0;  // advertised exponent of the check cost
  /// Independent witness check; when empty the pair check is re-run.
  std::function<bool(const PairWitness&)> accept;
};

struct PolygonInstance {
  std::vector<ExactPoint> vertices;  // simple polygon, counter-clockwise
  int edge = 0;                      // edge vertices[edge] -> vertices[edge + 1]
  int pieces = 3;                    // target K > 2

  void validate() const;
};

/// Pieces a line cuts the polygon into; the line must avoid every vertex.
std::size_t count_pieces(const PolygonInstance& poly, const ExactLine& line);
/// Whether the line properly crosses the distinguished edge.
bool crosses_edge(const PolygonInstance& poly, const ExactLine& line);
/// Lines parallel to the line through vertices u and v, just beside it on either side.
std::optional<ExactLine> polygon_cut_check(const PolygonInstance& poly, int u, int v);
/// A line avoiding every vertex that yields exactly K pieces and crosses the edge.
bool is_cut_witness(const PolygonInstance& poly, const ExactLine& line);

struct ProjectionInstance {
  std::vector<std::vector<ExactPoint>> polygons;  // convex, counter-clockwise

  void validate() const;
};

/// Whether the projections of all polygons onto direction d are pairwise disjoint.
bool projections_disjoint(const ProjectionInstance& inst, const ExactPoint& d);
/// Normals of the inner common tangents of polygons i and j.
std::vector<ExactPoint> inner_tangent_normals(const ProjectionInstance& inst, int i, int j);
/// A direction beside a critical direction of pair (i, j) with disjoint projections.
std::optional<ExactPoint> disjoint_projection_check(const ProjectionInstance& inst, int i, int j);

}  // namespace rqs::problems
