#include "origami/conics.hpp"

#include "origami/errors.hpp"

#include <algorithm>

namespace origami::conics {

namespace {

using Triple = std::array<ExactReal, 3>;

ExactReal qform(const Mat3& m, const Triple& u, const Triple& v) {
  ExactReal s(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = s + u[i] * m[i * 3 + j] * v[j];
  return s;
}

ExactReal abs_val(const ExactReal& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

ExactReal det3(const Mat3& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Mat3 adjoint(const Mat3& m) {
  Mat3 r;
  // transposed cofactors
  r[0] = m[4] * m[8] - m[5] * m[7];
  r[1] = m[2] * m[7] - m[1] * m[8];
  r[2] = m[1] * m[5] - m[2] * m[4];
  r[3] = m[5] * m[6] - m[3] * m[8];
  r[4] = m[0] * m[8] - m[2] * m[6];
  r[5] = m[2] * m[3] - m[0] * m[5];
  r[6] = m[3] * m[7] - m[4] * m[6];
  r[7] = m[1] * m[6] - m[0] * m[7];
  r[8] = m[0] * m[4] - m[1] * m[3];
  return r;
}

Conic Conic::make(const Mat3& m) {
  int lead = -1;
  for (int i = 0; i < 9 && lead < 0; ++i)
    if (m[i].sign() != 0) lead = i;
  if (lead < 0) throw DegenerateConic();
  Conic c;
  for (int i = 0; i < 9; ++i) c.m[i] = m[i] / m[lead];
  return c;
}

Conic Conic::raw(const Mat3& m) {
  Conic c;
  c.m = m;
  return c;
}

Conic Conic::from_coeffs(const ExactReal& a, const ExactReal& b, const ExactReal& c,
                         const ExactReal& d, const ExactReal& e, const ExactReal& f) {
  ExactReal two(2);
  return make({two * a, d, e, d, two * b, f, e, f, two * c});
}

ExactReal Conic::eval(const ProjPoint& p) const {
  return qform(m, {p.x, p.y, p.z}, {p.x, p.y, p.z});
}

bool same_conic(const Conic& a, const Conic& b) {
  for (int i = 0; i < 9; ++i)
    if (compare(a.m[i], b.m[i]) != 0) return false;
  return true;
}

Conic conic_from_parabola(const Point& focus, const Line& directrix) {
  if (directrix.contains(focus)) throw DegenerateParabola();
  const ExactReal &a = directrix.a, &b = directrix.b, &c = directrix.c;
  ExactReal n = a * a + b * b;
  // n [(x - fx z)^2 + (y - fy z)^2] - (a x + b y + c z)^2 = 0
  Mat3 m;
  m[0] = n - a * a;
  m[4] = n - b * b;
  m[8] = n * (focus.x * focus.x + focus.y * focus.y) - c * c;
  m[1] = m[3] = -a * b;
  m[2] = m[6] = -n * focus.x - a * c;
  m[5] = m[7] = -n * focus.y - b * c;
  return Conic::make(m);
}

Conic dual(const Conic& c) {
  if (c.degenerate()) throw DegenerateConic();
  return Conic::make(adjoint(c.m));
}

std::vector<ExactReal> degenerate_params(const Pencil& pen) {
  if (same_conic(pen.a, pen.b)) throw DegeneratePencil();
  auto at = [&](long lam) {
    Mat3 d;
    for (int i = 0; i < 9; ++i) d[i] = pen.a.m[i] - ExactReal(lam) * pen.b.m[i];
    return det3(d);
  };
  // cubic c3 L^3 + c2 L^2 + c1 L + c0 by interpolation at L = 0, 1, -1, 2
  ExactReal f0 = at(0), f1 = at(1), fm1 = at(-1), f2 = at(2);
  ExactReal c0 = f0;
  ExactReal c2 = (f1 + fm1) / ExactReal(2) - c0;
  ExactReal s = (f1 - fm1) / ExactReal(2);           // c3 + c1
  ExactReal t = f2 - c0 - ExactReal(4) * c2;         // 8 c3 + 2 c1
  ExactReal c3 = (t - ExactReal(2) * s) / ExactReal(6);
  ExactReal c1 = s - c3;

  if (c3.sign() == 0 && c2.sign() == 0 && c1.sign() == 0 && c0.sign() == 0)
    throw DegeneratePencil();

  std::vector<ExactReal> out;
  if (c3.sign() != 0) {
    // depress: L = mu - c2/(3 c3)
    ExactReal shift = c2 / (ExactReal(3) * c3);
    ExactReal p = c1 / c3 - shift * shift * ExactReal(3);
    ExactReal q = ExactReal(2) * shift * shift * shift - c2 * c1 / (ExactReal(3) * c3 * c3) +
                  c0 / c3;
    for (auto& rm : cubic_roots(p, q)) out.push_back(rm.root - shift);
  } else if (c2.sign() != 0) {
    ExactReal disc = c1 * c1 - ExactReal(4) * c2 * c0;
    int sd = disc.sign();
    if (sd == 0) {
      out.push_back(-c1 / (ExactReal(2) * c2));
    } else if (sd > 0) {
      ExactReal r = ExactReal::sqrt(disc);
      out.push_back((-c1 - r) / (ExactReal(2) * c2));
      out.push_back((-c1 + r) / (ExactReal(2) * c2));
      if (compare(out[0], out[1]) > 0) std::swap(out[0], out[1]);
    }
  } else if (c1.sign() != 0) {
    out.push_back(-c0 / c1);
  }
  return out;
}

namespace {

struct ProjSplit {
  enum { Two, Double, None } kind;
  Triple g, h;  // Two: both; Double: g only
};

bool is_rank_one(const Mat3& d, int& r, int& s) {
  r = s = -1;
  for (int i = 0; i < 9 && r < 0; ++i)
    if (d[i].sign() != 0) r = i / 3, s = i % 3;
  if (r < 0) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if ((d[i * 3 + j] * d[r * 3 + s] - d[i * 3 + s] * d[r * 3 + j]).sign() != 0)
        return false;
  return true;
}

ProjSplit split_proj(const Conic& c) {
  if (!c.degenerate()) throw NotDegenerate();
  const Mat3& m = c.m;
  Mat3 b = adjoint(m);
  bool adj_zero = true;
  for (int i = 0; i < 9 && adj_zero; ++i) adj_zero = b[i].sign() == 0;

  if (adj_zero) {
    // rank 1: M is proportional to l l^t; some diagonal entry is nonzero
    for (int i = 0; i < 3; ++i)
      if (m[i * 3 + i].sign() != 0)
        return {ProjSplit::Double, {m[i * 3], m[i * 3 + 1], m[i * 3 + 2]}, {}};
    throw NotDegenerate();  // unreachable for a valid symmetric matrix
  }

  // rank 2: Adj(M) = -p p^t (up to the overall scale of M) where p is the
  // intersection of the two lines; real factorization iff some B_ii < 0
  int i = -1;
  for (int k = 0; k < 3 && i < 0; ++k)
    if (b[k * 3 + k].sign() != 0) i = k;
  if (b[i * 3 + i].sign() > 0) return {ProjSplit::None, {}, {}};

  // p = -col_i(B) / lam meets both lines; scale everything by lam > 0 instead
  // of dividing, which keeps the expressions (and separation bounds) shallow
  ExactReal lam = ExactReal::sqrt(-b[i * 3 + i]);
  Triple p = {-b[i], -b[3 + i], -b[6 + i]};
  // one of lam*M +- [p]_x has rank 1 and equals (a scale of) g h^t
  Mat3 cross = {ExactReal(0), -p[2], p[1], p[2], ExactReal(0), -p[0], -p[1], p[0], ExactReal(0)};
  Mat3 d;
  for (int k = 0; k < 9; ++k) d[k] = lam * m[k] + cross[k];
  int r, s;
  if (!is_rank_one(d, r, s)) {
    for (int k = 0; k < 9; ++k) d[k] = lam * m[k] - cross[k];
    if (!is_rank_one(d, r, s)) throw Error("degenerate conic did not split");
  }
  Triple g = {d[s], d[3 + s], d[6 + s]};        // column s
  Triple h = {d[r * 3], d[r * 3 + 1], d[r * 3 + 2]};  // row r
  // verify by re-expansion: g h^t + h g^t must reproduce M up to scale
  // (tested by cross-multiplication, which keeps expression depth down)
  Mat3 chk;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) chk[x * 3 + y] = g[x] * h[y] + h[x] * g[y];
  int lead = 0;
  while (m[lead].sign() == 0) ++lead;
  for (int k = 0; k < 9; ++k)
    if ((chk[k] * m[lead] - m[k] * chk[lead]).sign() != 0)
      throw Error("degenerate conic split verification failed");
  return {ProjSplit::Two, g, h};
}

Line line_from_triple(const Triple& t) {
  if (t[0].sign() == 0 && t[1].sign() == 0) throw PointAtInfinity();
  return Line::make(t[0], t[1], t[2]);
}

ProjPoint normalize_proj(const ProjPoint& p) {
  const ExactReal* lead = nullptr;
  if (p.x.sign() != 0)
    lead = &p.x;
  else if (p.y.sign() != 0)
    lead = &p.y;
  else
    lead = &p.z;
  return {p.x / *lead, p.y / *lead, p.z / *lead};
}

// finite points first sorted by affine coordinates, then directions at
// infinity (horizontal-most first, vertical last)
bool proj_less(const ProjPoint& a, const ProjPoint& b) {
  bool ia = a.at_infinity(), ib = b.at_infinity();
  if (ia != ib) return !ia;
  if (!ia) {
    int c = compare(a.x / a.z, b.x / b.z);
    if (c != 0) return c < 0;
    return compare(a.y / a.z, b.y / b.z) < 0;
  }
  bool va = a.x.sign() == 0, vb = b.x.sign() == 0;
  if (va != vb) return !va;
  if (va) return false;
  return compare(a.y / a.x, b.y / b.x) < 0;
}

}  // namespace

SplitResult split_degenerate(const Conic& c) {
  ProjSplit s = split_proj(c);
  switch (s.kind) {
    case ProjSplit::Double:
      return DoubleLine{line_from_triple(s.g)};
    case ProjSplit::Two:
      return TwoLines{line_from_triple(s.g), line_from_triple(s.h)};
    default:
      return NoRealLines{};
  }
}

std::vector<ProjPoint> line_conic_points(const ExactReal& a, const ExactReal& b,
                                         const ExactReal& c, const Conic& conic) {
  // two independent points spanning the line; P(t) = u + t v, plus v at t = inf
  Triple u, v;
  if (a.sign() != 0) {
    u = {b, -a, ExactReal(0)};
    v = {c, ExactReal(0), -a};
  } else if (b.sign() != 0) {
    u = {ExactReal(1), ExactReal(0), ExactReal(0)};
    v = {ExactReal(0), c, -b};
  } else {
    u = {ExactReal(1), ExactReal(0), ExactReal(0)};
    v = {ExactReal(0), ExactReal(1), ExactReal(0)};
  }
  ExactReal alpha = qform(conic.m, v, v);
  ExactReal beta = qform(conic.m, u, v);
  ExactReal gamma = qform(conic.m, u, u);

  // roots t of alpha t^2 + 2 beta t + gamma; points formed as projective
  // combinations s*u + t*v so no division ever enters the coordinates
  auto at = [&](const ExactReal& s, const ExactReal& t) {
    return ProjPoint{s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]};
  };

  std::vector<ProjPoint> out;
  if (alpha.sign() == 0) {
    if (beta.sign() == 0) {
      if (gamma.sign() == 0) throw DegenerateConic();  // whole line on the conic
      out.push_back({v[0], v[1], v[2]});
    } else {
      out.push_back({v[0], v[1], v[2]});
      out.push_back(at(ExactReal(2) * beta, -gamma));
    }
  } else {
    ExactReal disc = beta * beta - alpha * gamma;
    int sd = disc.sign();
    if (sd == 0) {
      out.push_back(at(alpha, -beta));
    } else if (sd > 0) {
      ExactReal r = ExactReal::sqrt(disc);
      out.push_back(at(alpha, -beta - r));
      out.push_back(at(alpha, -beta + r));
    }
  }
  for (auto& p : out) p = normalize_proj(p);
  return out;
}

std::vector<ProjPoint> common_points(const Conic& a, const Conic& b) {
  if (a.degenerate() || b.degenerate()) throw DegenerateConic();
  if (same_conic(a, b)) throw DegeneratePencil();

  std::vector<ExactReal> lams = degenerate_params({a, b});
  // smallest |lambda| first, ties toward negative
  std::sort(lams.begin(), lams.end(), [](const ExactReal& x, const ExactReal& y) {
    int c = compare(abs_val(x), abs_val(y));
    if (c != 0) return c < 0;
    return compare(x, y) < 0;
  });

  std::vector<ProjPoint> pts;
  auto add = [&](const ProjPoint& p) {
    for (auto& q : pts)
      if (geom::same_proj(p, q)) return;
    pts.push_back(p);
  };

  // Any common point lies on every pencil member, so the line factors of a
  // single real-split degenerate member already carry all of them; using just
  // one member keeps the radical count (and separation bounds) small.
  std::vector<Mat3> complex_pairs;
  bool split_found = false;
  for (auto& lam : lams) {
    Mat3 d;
    for (int i = 0; i < 9; ++i) d[i] = a.m[i] - lam * b.m[i];
    ProjSplit sp = split_proj(Conic::raw(d));
    if (sp.kind == ProjSplit::None) {
      complex_pairs.push_back(d);
      continue;
    }
    std::vector<Triple> lines{sp.g};
    if (sp.kind == ProjSplit::Two) lines.push_back(sp.h);
    for (auto& l : lines)
      for (auto& p : line_conic_points(l[0], l[1], l[2], b)) add(p);
    split_found = true;
    break;
  }
  if (!split_found) {
    // every real member is a pair of complex-conjugate lines; its only real
    // point is its vertex (the kernel, a column of the adjoint), which is a
    // common point exactly when it lies on the conics
    for (auto& d : complex_pairs) {
      Mat3 adj = adjoint(d);
      for (int j = 0; j < 3; ++j) {
        ProjPoint v{adj[j], adj[3 + j], adj[6 + j]};
        if (v.x.sign() == 0 && v.y.sign() == 0 && v.z.sign() == 0) continue;
        if (a.contains(v) && b.contains(v)) add(normalize_proj(v));
        break;
      }
    }
  }
  std::sort(pts.begin(), pts.end(), proj_less);
  return pts;
}

std::vector<Tangent> common_tangents(const Conic& a, const Conic& b) {
  std::vector<Tangent> out;
  for (auto& p : common_points(dual(a), dual(b))) {
    if (p.x.sign() == 0 && p.y.sign() == 0)
      out.push_back({true, {}});
    else
      out.push_back({false, Line::make(p.x, p.y, p.z)});
  }
  // affine tangents by slope ascending, vertical after, line at infinity last
  std::sort(out.begin(), out.end(), [](const Tangent& s, const Tangent& t) {
    auto rank = [](const Tangent& x) {
      if (x.at_infinity) return 2;
      return x.line.vertical() ? 1 : 0;
    };
    int rs = rank(s), rt = rank(t);
    if (rs != rt) return rs < rt;
    if (rs == 0) {
      int c = compare(s.line.slope(), t.line.slope());
      if (c != 0) return c < 0;
      return compare(s.line.c, t.line.c) < 0;
    }
    if (rs == 1) return compare(s.line.c, t.line.c) < 0;
    return false;
  });
  return out;
}

}  // namespace origami::conics
