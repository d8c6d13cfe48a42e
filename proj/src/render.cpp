#include "origami/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace origami::render {

namespace {

constexpr int kSamples = 512;

double to_d(const ExactReal& v) { return v.refine(64).midpoint().to_double(); }

std::string fmt(double v) {
  char buf[64];
  // clamp to keep the output well-formed even for off-screen samples
  if (!std::isfinite(v)) v = v > 0 ? 1e6 : -1e6;
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // avoid the "-0.00" vs "0.00" instability
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

struct Mapper {
  double xmin, ymin, xmax, ymax;
  int w, h;

  double px(double x) const { return (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return (ymax - y) / (ymax - ymin) * h; }
};

// Exact clip of a line to the viewport rectangle: intersect with each border,
// keep intersections inside the closed rectangle, deduplicate.
std::vector<geom::Point> clip_line(const geom::Line& l, const Viewport& vp) {
  using geom::Line;
  using geom::Point;
  const Line borders[4] = {
      Line::make(ExactReal(1), ExactReal(0), -vp.xmin),
      Line::make(ExactReal(1), ExactReal(0), -vp.xmax),
      Line::make(ExactReal(0), ExactReal(1), -vp.ymin),
      Line::make(ExactReal(0), ExactReal(1), -vp.ymax),
  };
  std::vector<Point> hits;
  for (const Line& b : borders) {
    if (geom::parallel(l, b)) continue;
    Point p = geom::intersect(l, b);
    if (compare(p.x, vp.xmin) < 0 || compare(p.x, vp.xmax) > 0) continue;
    if (compare(p.y, vp.ymin) < 0 || compare(p.y, vp.ymax) > 0) continue;
    bool dup = false;
    for (const Point& q : hits) dup |= geom::same_point(p, q);
    if (!dup) hits.push_back(p);
  }
  return hits;
}

// Affine coefficients A x^2 + B xy + C y^2 + D x + E y + F of a conic.
struct Affine {
  double A, B, C, D, E, F;
};

Affine affine_coeffs(const conics::Conic& c) {
  return {to_d(c.m[0]),     2 * to_d(c.m[1]), to_d(c.m[4]),
          2 * to_d(c.m[2]), 2 * to_d(c.m[5]), to_d(c.m[8])};
}

// One conic branch: sweep the given coordinate, solve the quadratic for the
// other, emit polyline segments broken at gaps where no real solution exists.
void sample_branch(std::ostringstream& os, const Mapper& map, const Affine& k,
                   bool sweep_x, int sign) {
  double lo = sweep_x ? map.xmin : map.ymin;
  double hi = sweep_x ? map.xmax : map.ymax;
  bool open = false;
  std::string path;
  for (int i = 0; i < kSamples; ++i) {
    double t = lo + (hi - lo) * i / (kSamples - 1);
    // coefficients of the quadratic in the other coordinate
    double qa, qb, qc;
    if (sweep_x) {
      qa = k.C;
      qb = k.B * t + k.E;
      qc = (k.A * t + k.D) * t + k.F;
    } else {
      qa = k.A;
      qb = k.B * t + k.D;
      qc = (k.C * t + k.E) * t + k.F;
    }
    double u = 0;
    bool real = true;
    if (qa != 0) {
      double disc = qb * qb - 4 * qa * qc;
      if (disc < 0) real = false;
      else u = (-qb + sign * std::sqrt(disc)) / (2 * qa);
    } else if (qb != 0) {
      if (sign < 0) return;  // single-valued: draw only once
      u = -qc / qb;
    } else {
      real = false;
    }
    double x = sweep_x ? t : u;
    double y = sweep_x ? u : t;
    bool inside = real && x >= map.xmin - 1e-9 && x <= map.xmax + 1e-9 &&
                  y >= map.ymin - 1e-9 && y <= map.ymax + 1e-9;
    if (inside) {
      path += open ? " L " : (open = true, path.empty() ? "M " : " M ");
      path += fmt(map.px(x)) + " " + fmt(map.py(y));
    } else {
      open = false;
    }
  }
  if (!path.empty())
    os << "  <path d=\"" << path
       << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene, const Viewport& vp, int width, int height) {
  if (compare(vp.xmin, vp.xmax) >= 0 || compare(vp.ymin, vp.ymax) >= 0)
    throw EmptyViewport();

  Mapper map{to_d(vp.xmin), to_d(vp.ymin), to_d(vp.xmax), to_d(vp.ymax),
             width, height};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";

  for (auto& [id, conic] : scene.conics) {
    (void)id;
    Affine k = affine_coeffs(conic);
    // sweep x when the conic is quadratic in y; otherwise sweep y
    bool sweep_x = k.C != 0 || k.A == 0;
    sample_branch(os, map, k, sweep_x, +1);
    sample_branch(os, map, k, sweep_x, -1);
  }

  for (auto& [id, line] : scene.lines) {
    (void)id;
    std::vector<geom::Point> ends = clip_line(line, vp);
    if (ends.size() < 2) continue;  // misses the viewport (or grazes a corner)
    os << "  <line x1=\"" << fmt(map.px(to_d(ends[0].x))) << "\" y1=\""
       << fmt(map.py(to_d(ends[0].y))) << "\" x2=\"" << fmt(map.px(to_d(ends[1].x)))
       << "\" y2=\"" << fmt(map.py(to_d(ends[1].y)))
       << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }

  for (auto& [id, point] : scene.points) {
    (void)id;
    double x = to_d(point.x), y = to_d(point.y);
    if (x < map.xmin || x > map.xmax || y < map.ymin || y > map.ymax) continue;
    os << "  <circle cx=\"" << fmt(map.px(x)) << "\" cy=\"" << fmt(map.py(y))
       << "\" r=\"3\" fill=\"#d62728\"/>\n";
  }

  for (auto& [id, point] : scene.points) {
    double x = to_d(point.x), y = to_d(point.y);
    if (x < map.xmin || x > map.xmax || y < map.ymin || y > map.ymax) continue;
    os << "  <text x=\"" << fmt(map.px(x) + 5) << "\" y=\"" << fmt(map.py(y) - 5)
       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">" << id
       << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace origami::render
