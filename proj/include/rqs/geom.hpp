#pragma once

// Plane primitives in two numeric regimes: exact rationals for everything
// built from straight lines, binary64 with an absolute tolerance for unit
// circles (whose intersections are irrational).

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rqs::geom {

using Rat = mpq_class;

/// Parses "3", "-1/7", "0.125", "-2.5e-3" into an exact rational.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);
int sign(const Rat& r);

struct ExactPoint {
  Rat x;
  Rat y;

  friend bool operator==(const ExactPoint& a, const ExactPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const ExactPoint& a, const ExactPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// The line a*x + b*y = c, normalized so the first nonzero of (a, b) is 1.
class ExactLine {
 public:
  ExactLine(Rat a, Rat b, Rat c);

  /// y = slope*x + intercept.
  static ExactLine from_slope(const Rat& slope, const Rat& intercept);
  static ExactLine through(const ExactPoint& p, const ExactPoint& q);
  static ExactLine vertical(const Rat& x) { return ExactLine(1, 0, x); }
  static ExactLine horizontal(const Rat& y) { return ExactLine(0, 1, y); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  bool is_vertical() const { return sgn(b_) == 0; }

  /// a*x + b*y - c; its sign tells the side of p.
  Rat eval(const ExactPoint& p) const { return a_ * p.x + b_ * p.y - c_; }
  int side(const ExactPoint& p) const { return sgn(eval(p)); }
  /// y on the line at abscissa x (non-vertical lines only).
  Rat y_at(const Rat& x) const;
  /// Direction vector (b, -a).
  ExactPoint direction() const { return {b_, -a_}; }

  friend bool operator==(const ExactLine& l, const ExactLine& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }

 private:
  Rat a_, b_, c_;
};

struct ApproxPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Absolute tolerance of the floating regime; inputs are pre-scaled to |coordinate| <= 1e3.
inline constexpr double kTolerance = 1e-9;
inline constexpr double kMaxCoordinate = 1e3;

int orient(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r);
/// (q - p) x (r - p), exact.
Rat cross(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r);

/// p = (px, py) maps to the line y = px*x - py.
ExactLine dual_of_point(const ExactPoint& p);

/// Intersection point, or nullopt when the lines are parallel (identical lines included).
std::optional<ExactPoint> line_intersection(const ExactLine& l1, const ExactLine& l2);

/// |l(q.x) - q.y|. Throws std::invalid_argument for vertical lines.
Rat vertical_distance(const ExactPoint& q, const ExactLine& l);

/// Twice the triangle area, exact.
Rat triangle_area2(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

/// Intersections of two circles of equal radius r. Tangency within kTolerance collapses
/// to a single point; coincident or too-distant centers give none.
std::vector<ApproxPoint> circle_circle_intersections(const ApproxPoint& c1, const ApproxPoint& c2, double r);

double distance(const ApproxPoint& a, const ApproxPoint& b);
double to_double(const Rat& r);

}  // namespace rqs::geom
