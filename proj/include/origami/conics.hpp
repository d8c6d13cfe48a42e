#pragma once

#include "origami/geom.hpp"

#include <array>
#include <variant>
#include <vector>

namespace origami::conics {

using geom::Line;
using geom::Point;
using geom::ProjPoint;

// Row-major 3x3 matrix of exact reals.
using Mat3 = std::array<ExactReal, 9>;

ExactReal det3(const Mat3& m);
Mat3 adjoint(const Mat3& m);

// Projective conic (x,y,z) M (x,y,z)^t = 0 with M symmetric and nonzero,
// considered up to scale.  make() normalizes the first nonzero entry in
// row-major order to 1 so equal loci compare entrywise equal.
struct Conic {
  Mat3 m;

  static Conic make(const Mat3& m);
  // same locus, entries kept as given (no normalizing division); cheaper for
  // intermediate values whose canonical form is never compared
  static Conic raw(const Mat3& m);
  // from the six coefficients of a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
  static Conic from_coeffs(const ExactReal& a, const ExactReal& b, const ExactReal& c,
                           const ExactReal& d, const ExactReal& e, const ExactReal& f);

  ExactReal eval(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return eval(p).sign() == 0; }
  ExactReal det() const { return det3(m); }
  bool degenerate() const { return det().sign() == 0; }
};

bool same_conic(const Conic& a, const Conic& b);

// {S : dist(S, focus)^2 = dist(S, directrix)^2}; requires focus not on directrix
Conic conic_from_parabola(const Point& focus, const Line& directrix);

// adjoint conic; requires det != 0
Conic dual(const Conic& c);

struct Pencil {
  Conic a, b;  // must be independent (not proportional)
};

// all real roots lambda of det(A - lambda B) = 0, ascending
std::vector<ExactReal> degenerate_params(const Pencil& pen);

struct TwoLines {
  Line l1, l2;
};
struct DoubleLine {
  Line l;
};
struct NoRealLines {};
using SplitResult = std::variant<TwoLines, DoubleLine, NoRealLines>;

// Factor a degenerate conic into lines.  Requires det = 0.  Throws
// PointAtInfinity if a factor is the line at infinity (no affine Line form).
SplitResult split_degenerate(const Conic& c);

// Real intersection points of two distinct non-degenerate conics, deduplicated,
// in a deterministic order (finite points first, sorted by affine coordinates).
std::vector<ProjPoint> common_points(const Conic& a, const Conic& b);

struct Tangent {
  bool at_infinity = false;
  Line line;  // valid only when !at_infinity
};

// Real common tangents via duality; affine tangents sorted by slope ascending
// with vertical lines after, the line at infinity (if tangent to both) last.
std::vector<Tangent> common_tangents(const Conic& a, const Conic& b);

// Real projective points of a line a x + b y + c z = 0 on a conic (0, 1 or 2,
// or the whole line when it lies on the conic -- then throws DegenerateConic).
std::vector<ProjPoint> line_conic_points(const ExactReal& a, const ExactReal& b,
                                         const ExactReal& c, const Conic& conic);

}  // namespace origami::conics
