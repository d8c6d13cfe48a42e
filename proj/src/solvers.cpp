#include "origami/solvers.hpp"

#include "origami/conics.hpp"

#include <algorithm>

namespace origami::solvers {

namespace {

using folds::Engine;
using geom::Line;
using geom::Point;

ExactReal q(long n, long d = 1) { return ExactReal(Rational(n, d)); }

// multiplicity of a known root x0 of x^3 + a x + b
int cubic_mult(const ExactReal& x0, const ExactReal& a) {
  if ((ExactReal(3) * x0 * x0 + a).sign() != 0) return 1;
  return x0.sign() == 0 ? 3 : 2;
}

// multiplicity of a known root x0 of x^4 + a x^2 + b x + c
int quartic_mult(const ExactReal& x0, const ExactReal& a, const ExactReal& b) {
  if ((ExactReal(4) * x0 * x0 * x0 + ExactReal(2) * a * x0 + b).sign() != 0) return 1;
  if ((ExactReal(12) * x0 * x0 + ExactReal(2) * a).sign() != 0) return 2;
  return x0.sign() == 0 ? 4 : 3;
}

void sort_roots(std::vector<RootMult>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const RootMult& x, const RootMult& y) { return compare(x.root, y.root) < 0; });
}

}  // namespace

std::pair<ExactReal, Trace> sqrt_by_fold(const ExactReal& r) {
  if (r.sign() <= 0) throw NonPositiveInput();
  Engine eng(folds::Level::Euclidean);
  // parabola y = x^2/4; tangents from (0, -r/4) touch it at x = +-sqrt(r)
  Point focus{q(0), q(1)};
  Line directrix = Line::make(q(0), q(1), q(1));
  Point aux{q(0), -r / q(4)};
  folds::FoldResult fr = eng.O5(focus, directrix, aux);
  if (fr.lines.size() != 2 || fr.lines.back().vertical())
    throw Error("square-root fold: unexpected configuration");
  // the tangent of slope m touches at x = 2m
  ExactReal s = ExactReal(2) * fr.lines.back().slope();
  return {s, eng.trace()};
}

std::pair<std::vector<RootMult>, Trace> cubic_by_fold(const ExactReal& a,
                                                      const ExactReal& b) {
  std::vector<RootMult> roots;
  if (b.sign() == 0) {
    // mu (mu^2 + a) = 0
    int sa = a.sign();
    if (sa == 0) {
      roots.push_back({ExactReal(0), 3});
    } else if (sa > 0) {
      roots.push_back({ExactReal(0), 1});
    } else {
      ExactReal s = ExactReal::sqrt(-a);
      roots.push_back({-s, 1});
      roots.push_back({ExactReal(0), 1});
      roots.push_back({s, 1});
    }
    return {roots, Trace{}};
  }

  // folds between (y - a/2)^2 = 2bx (focus (b/2, a/2), directrix x = -b/2)
  // and y = x^2/2 (focus (0, 1/2), directrix y = -1/2) have slopes solving
  // mu^3 + a mu + b = 0
  Engine eng;
  Point f1{b / q(2), a / q(2)};
  Line d1 = Line::make(q(1), q(0), b / q(2));
  Point f2{q(0), q(1, 2)};
  Line d2 = Line::make(q(0), q(1), q(1, 2));
  folds::FoldResult fr = eng.O6(f1, d1, f2, d2);
  for (auto& f : fr.lines) {
    if (f.vertical()) continue;  // no vertical tangents exist for y = x^2/2
    ExactReal mu = f.slope();
    roots.push_back({mu, cubic_mult(mu, a)});
  }
  sort_roots(roots);
  return {roots, eng.trace()};
}

std::vector<RootMult> trisect(const ExactReal& c) {
  if (compare(c, q(1)) > 0 || compare(c, q(-1)) < 0)
    throw OutOfRange("cos(3*theta) must lie in [-1, 1]");
  // 4x^3 - 3x - c = 0  <=>  x^3 - (3/4)x - c/4 = 0
  return cubic_by_fold(q(-3, 4), -c / q(4)).first;
}

ExactReal duplicate_cube() {
  auto [roots, trace] = cubic_by_fold(q(0), q(-2));
  if (roots.size() != 1) throw Error("cube duplication: unexpected root count");
  return roots.front().root;
}

std::vector<RootMult> quartic_roots(const ExactReal& a, const ExactReal& b,
                                    const ExactReal& c) {
  std::vector<RootMult> roots;
  if (b.sign() == 0) {
    // biquadratic: x^4 + a x^2 + c = (x^2 - y1)(x^2 - y2)
    ExactReal disc = a * a - q(4) * c;
    int sd = disc.sign();
    if (sd < 0) return roots;
    std::vector<RootMult> ys;
    if (sd == 0) {
      ys.push_back({-a / q(2), 2});
    } else {
      ExactReal r = ExactReal::sqrt(disc);
      ys.push_back({(-a - r) / q(2), 1});
      ys.push_back({(-a + r) / q(2), 1});
    }
    for (auto& y : ys) {
      int sy = y.root.sign();
      if (sy < 0) continue;
      if (sy == 0) {
        roots.push_back({ExactReal(0), 2 * y.multiplicity});
      } else {
        ExactReal x = ExactReal::sqrt(y.root);
        roots.push_back({-x, y.multiplicity});
        roots.push_back({x, y.multiplicity});
      }
    }
    sort_roots(roots);
    return roots;
  }

  // real roots are the x-coordinates of the common points of y = x^2 and
  // (y + a/2)^2 = -b (x + (4c - a^2)/(4b)), projectivized as
  // x^2 - yz = 0 and y^2 + a yz + b xz + c z^2 = 0
  conics::Conic p1 = conics::Conic::from_coeffs(q(1), q(0), q(0), q(0), q(0), q(-1));
  conics::Conic p2 = conics::Conic::from_coeffs(q(0), q(1), c, q(0), b, a);
  for (auto& p : conics::common_points(p1, p2)) {
    if (p.at_infinity()) continue;
    ExactReal x = p.x / p.z;
    roots.push_back({x, quartic_mult(x, a, b)});
  }
  sort_roots(roots);
  return roots;
}

ExactReal ninegon_cos() {
  auto roots = trisect(q(-1, 2));
  if (roots.empty()) throw Error("9-gon: unexpected empty root list");
  return roots.back().root;
}

}  // namespace origami::solvers
