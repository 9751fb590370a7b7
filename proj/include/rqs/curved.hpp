#pragma once

// Subdivisions induced by unit circles: the disk arrangement, its refinement by
// quarter-arc pseudolines, and a horizontal-visibility sweep that cuts every
// region into cells bounded by two monotone sides and at most two horizontal
// segments. Floating-point regime with absolute tolerance kTolerance.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rqs/geom.hpp"

namespace rqs::curved {

using geom::ApproxPoint;
using geom::kTolerance;

struct UnitDisk {
  ApproxPoint center;
};

struct Rect {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;

  bool overlaps(const Rect& o) const {
    return xmin <= o.xmax + kTolerance && o.xmin <= xmax + kTolerance && ymin <= o.ymax + kTolerance &&
           o.ymin <= ymax + kTolerance;
  }
};

/// Smallest rectangle containing every disk, grown by `margin`.
Rect disk_bbox(std::span<const UnitDisk> disks, double margin = 1.0);

enum class PieceKind { Arc, Segment };

/// A y-monotone unit-circle arc (one side of its circle) or a straight segment.
/// Endpoints satisfy a.y <= b.y; horizontal segments have a.y == b.y and a.x < b.x.
struct ArcOrSeg {
  PieceKind kind = PieceKind::Segment;
  int disk = -1;  // disk the piece was derived from, -1 for the bounding box
  ApproxPoint center;
  int side = 0;  // arcs: +1 right half, -1 left half
  ApproxPoint a, b;

  static ArcOrSeg arc(int disk, ApproxPoint center, int side, double y0, double y1);
  static ArcOrSeg segment(int disk, ApproxPoint a, ApproxPoint b);

  bool horizontal() const { return kind == PieceKind::Segment && a.y == b.y; }
  bool y_monotone() const { return !horizontal(); }
  /// Abscissa at height y, for y-monotone pieces; y is clamped to the piece's range.
  double x_at(double y) const;
  /// The same piece restricted to heights [y0, y1].
  ArcOrSeg clipped(double y0, double y1) const;
  /// Parameter along the piece: y for monotone pieces, x for horizontal ones.
  double param(const ApproxPoint& p) const { return horizontal() ? p.x : p.y; }
  ApproxPoint at_param(double t) const { return horizontal() ? ApproxPoint{t, a.y} : ApproxPoint{x_at(t), t}; }
  /// Points where the unit circle around `c` meets this piece.
  std::vector<ApproxPoint> meet_circle(const ApproxPoint& c) const;
  /// Closest and farthest points of the piece from p.
  ApproxPoint nearest(const ApproxPoint& p) const;
  ApproxPoint farthest(const ApproxPoint& p) const;
};

/// Region between two monotone sides over [y_bottom, y_top].
struct CurvedCell {
  double y_bottom = 0;
  double y_top = 0;
  ArcOrSeg left;
  ArcOrSeg right;
  int covering = 0;           // disks containing the whole cell
  std::vector<int> crossing;  // disks meeting the closed cell other than only at a corner

  /// Left and right sides plus the non-degenerate horizontal segments.
  std::vector<ArcOrSeg> boundary() const;
  std::size_t arc_count() const;      // sides
  std::size_t segment_count() const;  // horizontal segments
  std::array<ApproxPoint, 4> corners() const;  // bottom-left, bottom-right, top-right, top-left
  bool contains(const ApproxPoint& p, double tol = kTolerance) const;
  ApproxPoint interior_point() const;
  Rect bounds() const;
  /// Area by composite Simpson integration of the width.
  double area(int steps = 64) const;
};

/// Faces of the arrangement of sampled circles inside the box, each given by the
/// trapezoid-like pieces of a sweep over the circles alone.
struct DiskArrangement {
  Rect box;
  std::vector<ArcOrSeg> circles;  // quarter arcs of the sampled disks
  std::vector<std::vector<CurvedCell>> faces;
  std::vector<int> sample;

  std::size_t face_count() const { return faces.size(); }
};

/// Throws std::invalid_argument when two sampled centers coincide within tolerance.
DiskArrangement build_disk_arrangement(std::span<const UnitDisk> disks, std::span<const int> sample, const Rect& box);

/// Quarter arcs of every sampled circle extended by their tangent rays, plus the two
/// axis-parallel diameters of each disk and the box outline.
std::vector<ArcOrSeg> pseudoline_refine(const DiskArrangement& arrangement);

/// Horizontal-visibility subdivision. With `region_only` the pieces must form closed
/// curves and only gaps of odd crossing parity are kept (a single face); otherwise
/// every gap between the outermost pieces becomes a cell.
std::vector<CurvedCell> monotone_sweep_subdivide(std::span<const ArcOrSeg> pieces, bool region_only = true);

/// Sets covering and crossing for each cell, considering the disks listed in `subset`.
void classify_disks_per_cell(std::span<CurvedCell> cells, std::span<const UnitDisk> disks, std::span<const int> subset);

/// Number of disks in `subset` whose closed disk contains p (within tolerance).
int depth_at(const ApproxPoint& p, std::span<const UnitDisk> disks, std::span<const int> subset);

/// Points where two pieces meet; empty for overlapping pieces of the same circle.
std::vector<ApproxPoint> intersections(const ArcOrSeg& p, const ArcOrSeg& q);

/// True when two centers are within tolerance of distance 0 or 2.
bool near_degenerate(const UnitDisk& a, const UnitDisk& b);

}  // namespace rqs::curved
