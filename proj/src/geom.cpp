#include "origami/geom.hpp"

#include "origami/errors.hpp"

namespace origami::geom {

bool same_point(const Point& a, const Point& b) {
  return compare(a.x, b.x) == 0 && compare(a.y, b.y) == 0;
}

Line Line::make(const ExactReal& a, const ExactReal& b, const ExactReal& c) {
  if (a.sign() != 0) {
    Line l;
    l.a = ExactReal(1);
    l.b = b / a;
    l.c = c / a;
    return l;
  }
  if (b.sign() == 0) throw Error("degenerate line: a = b = 0");
  Line l;
  l.a = ExactReal(0);
  l.b = ExactReal(1);
  l.c = c / b;
  return l;
}

bool same_line(const Line& l, const Line& m) {
  return compare(l.a, m.a) == 0 && compare(l.b, m.b) == 0 && compare(l.c, m.c) == 0;
}

bool parallel(const Line& l, const Line& m) {
  return (l.a * m.b - m.a * l.b).sign() == 0;
}

Line line_through(const Point& p, const Point& q) {
  if (same_point(p, q)) throw CoincidentPoints();
  // (y2-y1) x - (x2-x1) y + (x2 y1 - x1 y2) = 0
  return Line::make(q.y - p.y, p.x - q.x, q.x * p.y - p.x * q.y);
}

Point intersect(const Line& l, const Line& m) {
  ExactReal det = l.a * m.b - m.a * l.b;
  if (det.sign() == 0) {
    if (same_line(l, m)) throw CoincidentLines();
    throw ParallelLines();
  }
  ExactReal x = (l.b * m.c - m.b * l.c) / det;
  ExactReal y = (m.a * l.c - l.a * m.c) / det;
  return {x, y};
}

Line perp_bisector(const Point& p, const Point& q) {
  if (same_point(p, q)) throw CoincidentPoints();
  // locus |S-p|^2 = |S-q|^2
  ExactReal a = ExactReal(2) * (q.x - p.x);
  ExactReal b = ExactReal(2) * (q.y - p.y);
  ExactReal c = p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y;
  return Line::make(a, b, c);
}

Point reflect_point(const Point& p, const Line& l) {
  ExactReal n2 = l.a * l.a + l.b * l.b;
  ExactReal t = (ExactReal(2) * l.eval(p)) / n2;
  return {p.x - l.a * t, p.y - l.b * t};
}

Line reflect_line(const Line& m, const Line& l) {
  // reflect two points of m
  Point p0 = m.vertical() ? Point(-m.c / m.a, ExactReal(0))
                          : Point(ExactReal(0), -m.c / m.b);
  Point p1 = m.vertical() ? Point(-m.c / m.a, ExactReal(1))
                          : Point(ExactReal(1), (-m.c - m.a) / m.b);
  return line_through(reflect_point(p0, l), reflect_point(p1, l));
}

Line perpendicular_through(const Point& p, const Line& l) {
  // direction of l is (-b, a); the perpendicular has normal (-b, a)
  return Line::make(-l.b, l.a, l.b * p.x - l.a * p.y);
}

Line parallel_through(const Point& p, const Line& l) {
  return Line::make(l.a, l.b, -(l.a * p.x + l.b * p.y));
}

Point midpoint(const Point& p, const Point& q) {
  return {(p.x + q.x) / ExactReal(2), (p.y + q.y) / ExactReal(2)};
}

ExactReal dist_squared(const Point& p, const Point& q) {
  ExactReal dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

ProjPoint embed(const Point& p) { return {p.x, p.y, ExactReal(1)}; }

Point to_affine(const ProjPoint& p) {
  if (p.z.sign() == 0) throw PointAtInfinity();
  return {p.x / p.z, p.y / p.z};
}

bool same_proj(const ProjPoint& p, const ProjPoint& q) {
  return (p.x * q.y - p.y * q.x).sign() == 0 && (p.x * q.z - p.z * q.x).sign() == 0 &&
         (p.y * q.z - p.z * q.y).sign() == 0;
}

ProjPoint dual_exchange(const Line& l) { return {l.a, l.b, l.c}; }

bool is_line_at_infinity(const ProjPoint& dual) {
  return dual.x.sign() == 0 && dual.y.sign() == 0;
}

Line line_from_dual(const ProjPoint& dual) {
  if (is_line_at_infinity(dual)) throw PointAtInfinity();
  return Line::make(dual.x, dual.y, dual.z);
}

}  // namespace origami::geom
