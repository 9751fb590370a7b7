#include "rqs/geom.hpp"

#include <cmath>
#include <stdexcept>

namespace rqs::geom {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.find('/') != std::string::npos) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    try {
      exponent = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent: " + text);
    }
  }
  bool negative = false;
  std::size_t pos = 0;
  if (pos < mantissa.size() && (mantissa[pos] == '-' || mantissa[pos] == '+')) {
    negative = mantissa[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; pos < mantissa.size(); ++pos) {
    char ch = mantissa[pos];
    if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("bad number: " + text);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number: " + text);
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  Rat r;
  if (scale >= 0) {
    r = Rat(num * pow10(static_cast<unsigned long>(scale)));
  } else {
    r = Rat(num, pow10(static_cast<unsigned long>(-scale)));
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

int sign(const Rat& r) { return sgn(r); }

ExactLine::ExactLine(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (sgn(a_) == 0 && sgn(b_) == 0) throw std::invalid_argument("degenerate line: a = b = 0");
  Rat lead = sgn(a_) != 0 ? a_ : b_;
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

ExactLine ExactLine::from_slope(const Rat& slope, const Rat& intercept) {
  // y = m x + t  <=>  -m x + y = t
  return ExactLine(-slope, 1, intercept);
}

ExactLine ExactLine::through(const ExactPoint& p, const ExactPoint& q) {
  Rat a = q.y - p.y;
  Rat b = p.x - q.x;
  Rat c = a * p.x + b * p.y;
  return ExactLine(a, b, c);
}

Rat ExactLine::y_at(const Rat& x) const {
  if (is_vertical()) throw std::invalid_argument("y_at on a vertical line");
  return (c_ - a_ * x) / b_;
}

Rat cross(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) { return sgn(cross(p, q, r)); }

ExactLine dual_of_point(const ExactPoint& p) { return ExactLine::from_slope(p.x, -p.y); }

std::optional<ExactPoint> line_intersection(const ExactLine& l1, const ExactLine& l2) {
  Rat det = l1.a() * l2.b() - l2.a() * l1.b();
  if (sgn(det) == 0) return std::nullopt;
  Rat x = (l1.c() * l2.b() - l2.c() * l1.b()) / det;
  Rat y = (l1.a() * l2.c() - l2.a() * l1.c()) / det;
  return ExactPoint{std::move(x), std::move(y)};
}

Rat vertical_distance(const ExactPoint& q, const ExactLine& l) {
  if (l.is_vertical()) throw std::invalid_argument("vertical_distance: vertical line");
  return abs(l.y_at(q.x) - q.y);
}

Rat triangle_area2(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) { return abs(cross(a, b, c)); }

std::vector<ApproxPoint> circle_circle_intersections(const ApproxPoint& c1, const ApproxPoint& c2, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("circle radius must be positive");
  const double dx = c2.x - c1.x;
  const double dy = c2.y - c1.y;
  const double d = std::hypot(dx, dy);
  if (d <= kTolerance) return {};
  if (d > 2.0 * r + kTolerance) return {};
  const double mx = c1.x + dx / 2.0;
  const double my = c1.y + dy / 2.0;
  if (std::abs(d - 2.0 * r) <= kTolerance) return {{mx, my}};
  const double h = std::sqrt(std::max(0.0, r * r - d * d / 4.0));
  const double ux = -dy / d;
  const double uy = dx / d;
  return {{mx + h * ux, my + h * uy}, {mx - h * ux, my - h * uy}};
}

double distance(const ApproxPoint& a, const ApproxPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace rqs::geom
