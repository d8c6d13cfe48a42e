#pragma once

#include "origami/exact.hpp"

namespace origami::geom {

struct Point {
  ExactReal x, y;

  Point() = default;
  Point(ExactReal px, ExactReal py) : x(std::move(px)), y(std::move(py)) {}

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  Point scaled(const ExactReal& s) const { return {x * s, y * s}; }
};

bool same_point(const Point& a, const Point& b);

// Locus a*x + b*y + c = 0, normalized so the first nonzero of (a, b) is 1.
struct Line {
  ExactReal a, b, c;

  // normalizes; requires (a, b) != (0, 0)
  static Line make(const ExactReal& a, const ExactReal& b, const ExactReal& c);

  ExactReal eval(const Point& p) const { return a * p.x + b * p.y + c; }
  bool contains(const Point& p) const { return eval(p).sign() == 0; }
  bool vertical() const { return b.sign() == 0; }
  // slope; requires not vertical
  ExactReal slope() const { return -a / b; }
};

bool same_line(const Line& l, const Line& m);
bool parallel(const Line& l, const Line& m);

struct ProjPoint {
  ExactReal x, y, z;

  bool at_infinity() const { return z.sign() == 0; }
};

bool same_proj(const ProjPoint& p, const ProjPoint& q);

Line line_through(const Point& p, const Point& q);       // requires p != q
Point intersect(const Line& l, const Line& m);           // requires not parallel
Line perp_bisector(const Point& p, const Point& q);      // requires p != q
Point reflect_point(const Point& p, const Line& l);
Line reflect_line(const Line& m, const Line& l);         // m mirrored across l
Line perpendicular_through(const Point& p, const Line& l);
Line parallel_through(const Point& p, const Line& l);
Point midpoint(const Point& p, const Point& q);
ExactReal dist_squared(const Point& p, const Point& q);

ProjPoint embed(const Point& p);
Point to_affine(const ProjPoint& p);                     // requires z != 0
// (a,b,c) line coefficients <-> projective point coordinates
ProjPoint dual_exchange(const Line& l);
// Projective line u*x + v*y + w*z = 0 from a dual point; requires (u,v) != 0
// for an affine line; (0,0,w) is the line at infinity and has no Line form.
bool is_line_at_infinity(const ProjPoint& dual);
Line line_from_dual(const ProjPoint& dual);

}  // namespace origami::geom
