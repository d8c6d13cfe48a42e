// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include "origami/fields.hpp"
#include "origami/render.hpp"
#include "origami/script.hpp"
#include "origami/solvers.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

using namespace origami;

namespace {

ExactReal q(long n, long d = 1) { return ExactReal(Rational(n, d)); }

struct Criterion {
  const char* name;
  double limit_s;
  std::function<void()> body;  // throws std::runtime_error on failure
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

// ---- rational polynomial helpers (Sturm oracle, ascending coefficients) ----

using Poly = std::vector<Rational>;

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Rational peval(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Poly deriv(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
  return d;
}

Poly neg_rem(const Poly& a, const Poly& b) {
  Poly r = a;
  while (r.size() >= b.size()) {
    Rational c = r.back() / b.back();
    std::size_t off = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
    r = trim(r);
    if (r.empty()) break;
  }
  for (auto& c : r) c = -c;
  return r;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{trim(f), trim(deriv(f))};
  while (!chain.back().empty() && chain.back().size() > 1) {
    Poly next = neg_rem(chain[chain.size() - 2], chain.back());
    if (next.empty()) break;
    chain.push_back(next);
  }
  return chain;
}

int sign_changes_at(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (auto& p : chain) {
    int s = peval(p, x).sign();
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

// distinct real roots in (a, b]
int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

// disjoint isolating intervals (lo, hi], one distinct root each
std::vector<std::pair<Rational, Rational>> isolate(const std::vector<Poly>& chain,
                                                   Rational lo, Rational hi) {
  std::vector<std::pair<Rational, Rational>> out;
  int n = sturm_count(chain, lo, hi);
  if (n == 0) return out;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return out;
  }
  Rational mid = (lo + hi) / 2;
  for (auto& iv : isolate(chain, lo, mid)) out.push_back(iv);
  for (auto& iv : isolate(chain, mid, hi)) out.push_back(iv);
  return out;
}

// rational enclosure of a root of p inside (lo, hi), width < 10^-12
std::pair<Rational, Rational> bisect_root(const Poly& p, Rational lo, Rational hi) {
  Rational eps(1, 1000000000000LL);
  int slo = peval(p, lo).sign();
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    int sm = peval(p, mid).sign();
    if (sm == 0) return {mid, mid};
    (sm == slo ? lo : hi) = mid;
  }
  return {lo, hi};
}

bool within(const ExactReal& v, const Rational& lo, const Rational& hi,
            const Rational& tol) {
  return compare(v, ExactReal(lo - tol)) >= 0 && compare(v, ExactReal(hi + tol)) <= 0;
}

std::mt19937 rng(20260824);

Rational rand_rat(long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return Rational(num(rng), den(rng));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- criteria -------------------------------------------------------------

void criterion_delian() {
  auto [roots, trace] = solvers::cubic_by_fold(q(0), q(-2));
  require(roots.size() == 1, "expected one real root");
  const ExactReal& r = roots[0].root;
  require(((r * r * r) - q(2)).sign() == 0, "r^3 - 2 != 0");
  Rational target(1259921049894873LL, 1000000000000000LL), tol(1, 1000000000000LL);
  require(within(r, target, target, tol), "decimal enclosure failed");
  // the O6 fold path agrees with the purely algebraic cubic solver
  auto alg = cubic_roots(q(0), q(-2));
  require(alg.size() == 1, "algebraic path root count");
  require(compare(r, alg[0].root) == 0, "fold path != algebraic path");
  bool has_o6 = false;
  for (auto& st : trace.steps) has_o6 |= st.op == "O6";
  require(has_o6, "trace lacks the O6 fold");
}

void criterion_ninegon() {
  // y = x^2/2  and  (y + 3/8)^2 = x/4
  conics::Conic a = conics::Conic::from_coeffs(q(1), q(0), q(0), q(0), q(0), q(-2));
  conics::Conic b =
      conics::Conic::from_coeffs(q(0), q(1), q(9, 64), q(0), q(-1, 4), q(3, 4));
  auto ts = conics::common_tangents(a, b);
  int affine = 0, infinite = 0;
  std::vector<ExactReal> slopes;
  for (auto& t : ts) {
    if (t.at_infinity) ++infinite;
    else {
      ++affine;
      require(!t.line.vertical(), "unexpected vertical tangent");
      slopes.push_back(t.line.slope());
    }
  }
  require(affine == 3 && infinite == 1, "expected 3 affine tangents + infinity marker");
  Poly cheb{Rational(1, 2), Rational(-3), Rational(0), Rational(4)};  // 4u^3-3u+1/2
  Rational tol(1, 1000000000);
  std::pair<Rational, Rational> boxes[3] = {
      bisect_root(cheb, Rational(-1), Rational(-1, 2)),
      bisect_root(cheb, Rational(0), Rational(1, 2)),
      bisect_root(cheb, Rational(1, 2), Rational(1)),
  };
  for (int i = 0; i < 3; ++i) {
    const ExactReal& mu = slopes[i];
    ExactReal v = ((q(4) * mu * mu) - q(3)) * mu + q(1, 2);
    require(v.sign() == 0, "slope does not satisfy 4u^3 - 3u + 1/2 = 0");
    require(within(mu, boxes[i].first, boxes[i].second, tol),
            "slope outside bisection enclosure");
  }
}

void criterion_discriminant() {
  for (int it = 0; it < 200; ++it) {
    Rational a = rand_rat(20, 20), b = rand_rat(20, 20);
    auto roots = solvers::cubic_by_fold(ExactReal(a), ExactReal(b)).first;
    Rational disc = Rational(27) * b * b + Rational(4) * a * a * a;
    std::size_t expect = disc.sign() < 0 ? 3 : disc.sign() > 0 ? 1 : (a.is_zero() ? 1 : 2);
    require(roots.size() == expect, "distinct-root count violates the sign rule");
  }
}

void criterion_sqrt_folds() {
  for (long r : {2L, 3L, 5L, 7L, 10L}) {
    auto [s, trace] = solvers::sqrt_by_fold(q(r));
    require(((s * s) - q(r)).sign() == 0, "s^2 != r");
    require(folds::replay(trace).to_json() == trace.to_json(), "replay not identical");
  }
}

void criterion_duals() {
  conics::Conic par = conics::Conic::from_coeffs(q(1), q(0), q(0), q(0), q(0), q(-2));
  require(conics::same_conic(conics::dual(par), par), "dual of y = x^2/2");
  conics::Conic b =
      conics::Conic::from_coeffs(q(0), q(1), q(9, 64), q(0), q(-1, 4), q(3, 4));
  // v^2 + 6uv - 16uw = 0
  conics::Conic bd =
      conics::Conic::from_coeffs(q(0), q(1), q(0), q(6), q(-16), q(0));
  require(conics::same_conic(conics::dual(b), bd), "dual of (y+3/8)^2 = x/4");

  ExactReal s2 = ExactReal::sqrt(q(2));
  for (int it = 0; it < 100; ++it) {
    conics::Mat3 m;
    ExactReal e[6];
    for (auto& v : e) v = ExactReal(rand_rat(3, 2)) + ExactReal(rand_rat(3, 2)) * s2;
    m = {e[0], e[1], e[2], e[1], e[3], e[4], e[2], e[4], e[5]};
    conics::Mat3 aa = conics::adjoint(conics::adjoint(m));
    ExactReal det = conics::det3(m);
    for (int i = 0; i < 9; ++i)
      require((aa[i] - det * m[i]).sign() == 0, "adjoint(adjoint) != det * M");
  }
}

void criterion_circle_tangent() {
  conics::Conic par = conics::Conic::from_coeffs(q(1), q(0), q(0), q(0), q(0), q(-1));
  conics::Conic circle =
      conics::Conic::from_coeffs(q(1), q(1), q(1), q(0), q(-2), q(-2));
  auto ts = conics::common_tangents(par, circle);
  bool found = false;
  for (auto& t : ts)
    if (!t.at_infinity && t.line.a.sign() == 0 && t.line.c.sign() == 0) found = true;
  require(found, "y = 0 not among the common tangents");
}

void criterion_ngon_table() {
  for (long n : {3, 4, 5, 6, 7, 8, 9, 12, 13, 17, 19, 27, 36, 73}) {
    auto r = fields::ngon_constructible(n);
    require(r.constructible && !r.certificate.empty(), "expected constructible");
  }
  for (long n : {11, 22, 23, 25, 29, 49}) {
    auto r = fields::ngon_constructible(n);
    require(!r.constructible && !r.certificate.empty(), "expected not constructible");
  }
}

void criterion_thalian() {
  for (long d : {2, 3, 5, 6}) {
    auto fc = fields::thalian_classify(Rational(0), Rational(d), false);
    require(fc.verdict == fields::Verdict::NonThalian, "sqrt(-D) must be non-Thalian");
  }
  for (long m = 3; m <= 24; ++m)
    require(fields::root_of_unity_thalian(m) == (m % 4 == 0), "root-of-unity verdict");
}

void criterion_totally_real() {
  auto yes = fields::totally_real_quadratic(Rational(4), Rational(2), Rational(2));
  require(yes.verdict == fields::Verdict::TotallyRealWitness, "sqrt(4+2sqrt2) accepted");
  auto no = fields::totally_real_quadratic(Rational(2), Rational(2), Rational(2));
  require(no.verdict == fields::Verdict::NotTotallyReal, "sqrt(2+2sqrt2) rejected");
  require(no.certificate.find("2 - (2)sqrt(2)") != std::string::npos,
          "conjugate certificate missing");
}

void criterion_axiom_basis() {
  for (int it = 0; it < 50; ++it) {
    geom::Point p{ExactReal(rand_rat(9, 4)), ExactReal(rand_rat(9, 4))};
    geom::Point r{ExactReal(rand_rat(9, 4)), ExactReal(rand_rat(9, 4))};
    if (geom::same_point(p, r)) r.x = r.x + q(1);
    folds::Engine eng;
    require(geom::same_line(eng.derive_O1_from_O2_O3_O5(p, r), eng.O1(p, r)),
            "derived O1 differs");
  }
  for (int it = 0; it < 50; ++it) {
    geom::Line l = geom::Line::make(q(1), ExactReal(rand_rat(6, 3)),
                                    ExactReal(rand_rat(6, 3)));
    geom::Line m = geom::Line::make(q(1), ExactReal(rand_rat(6, 3)),
                                    ExactReal(rand_rat(6, 3)));
    if (geom::same_line(l, m)) m = geom::Line::make(m.a, m.b, m.c + q(1));
    folds::Engine eng;
    auto direct = eng.O4(l, m).lines;
    auto derived = eng.derive_O4_from_O5(l, m).lines;
    require(direct.size() == derived.size(), "derived O4 count differs");
    for (std::size_t i = 0; i < direct.size(); ++i)
      require(geom::same_line(direct[i], derived[i]), "derived O4 line differs");
  }
}

void criterion_quartic() {
  auto save = sign_budget().max_bits;
  sign_budget().max_bits = std::int64_t(1) << 22;
  try {
    auto closed = solvers::quartic_roots(q(-5), q(0), q(4));
    require(closed.size() == 4, "x^4 - 5x^2 + 4 root count");
    long expect[] = {-2, -1, 1, 2};
    for (int i = 0; i < 4; ++i)
      require(compare(closed[i].root, q(expect[i])) == 0 && closed[i].multiplicity == 1,
              "x^4 - 5x^2 + 4 roots differ from {-2,-1,1,2}");

    for (int it = 0; it < 100; ++it) {
      Rational a = rand_rat(6, 3), b = rand_rat(6, 3), c = rand_rat(6, 3);
      auto roots = solvers::quartic_roots(ExactReal(a), ExactReal(b), ExactReal(c));
      Poly f{c, b, a, Rational(0), Rational(1)};
      auto chain = sturm_chain(f);
      // Cauchy bound for the monic quartic
      Rational bound = 1;
      for (auto& co : f)
        if (abs(co) > bound) bound = abs(co);
      bound += 1;
      int distinct = sturm_count(chain, -bound, bound);
      require(int(roots.size()) == distinct, "distinct-root count differs from Sturm");
      auto boxes = isolate(chain, -bound, bound);
      require(boxes.size() == roots.size(), "isolation count mismatch");
      for (std::size_t i = 0; i < roots.size(); ++i) {
        // each exact root lies in its Sturm isolating interval (lo, hi]
        require(compare(roots[i].root, ExactReal(boxes[i].first)) > 0 &&
                    compare(roots[i].root, ExactReal(boxes[i].second)) <= 0,
                "root escapes its isolating interval");
      }
    }
  } catch (...) {
    sign_budget().max_bits = save;
    throw;
  }
  sign_budget().max_bits = save;
}

void criterion_determinism() {
  const char* names[] = {
      "o1_o2_o3.ori", "diagonal.ori",  "o4_bisectors.ori", "sqrt2.ori",
      "o5_tangents.ori", "delian.ori", "ninegon.ori",      "trisect60.ori",
      "derive_o1_reduced.ori", "translate.ori", "scale.ori", "marklen.ori",
      "levels.ori"};
  render::Viewport vp{q(-3), q(-3), q(3), q(3)};
  for (const char* n : names) {
    std::string text = slurp(std::string(ORIGAMI_SCRIPTS_DIR) + "/" + n);
    require(!text.empty(), std::string("missing script ") + n);
    auto pass = [&] {
      auto [env, trace] = script::eval(script::parse(text));
      render::Scene sc;
      for (auto& [id, obj] : env.objects) {
        if (auto* p = std::get_if<geom::Point>(&obj)) sc.points.emplace_back(id, *p);
        else sc.lines.emplace_back(id, std::get<geom::Line>(obj));
      }
      for (auto& st : trace.steps) {
        auto parabola = [&](const std::string& fp, const std::string& dp) {
          sc.conics.emplace_back(
              fp + dp, conics::conic_from_parabola(
                           std::get<geom::Point>(*trace.find(fp)),
                           std::get<geom::Line>(*trace.find(dp))));
        };
        if (st.op == "O5") parabola(st.args[0], st.args[1]);
        if (st.op == "O6") {
          parabola(st.args[0], st.args[1]);
          parabola(st.args[2], st.args[3]);
        }
      }
      return std::pair<std::string, std::string>{
          trace.to_json(), render::render_svg(sc, vp, 640, 640)};
    };
    auto r1 = pass();
    auto r2 = pass();
    require(r1.first == r2.first, std::string("trace JSON differs for ") + n);
    require(r1.second == r2.second, std::string("SVG differs for ") + n);
  }
}

}  // namespace

int main() {
  sign_budget().max_bits = std::int64_t(1) << 21;

  Criterion criteria[] = {
      {"1. Delian cubic: solve-cubic 0 -2, fold path = algebraic path", 1.0,
       criterion_delian},
      {"2. 9-gon tangents: 3 affine lines + infinity marker, exact slopes", 2.0,
       criterion_ninegon},
      {"3. discriminant law on 200 random cubics", 30.0, criterion_discriminant},
      {"4. square roots by fold, deterministic trace replay", 1.0,
       criterion_sqrt_folds},
      {"5. dual conics and adjoint(adjoint) = det * M", 10.0, criterion_duals},
      {"6. circle/parabola common tangent y = 0", 1.0, criterion_circle_tangent},
      {"7. n-gon verdict table with certificates", 1.0, criterion_ngon_table},
      {"8. Thalian classification and roots of unity", 1.0, criterion_thalian},
      {"9. totally-real quadratic surds", 1.0, criterion_totally_real},
      {"10. axiom-basis equivalence on 50 random pairs", 10.0, criterion_axiom_basis},
      {"11. quartic roots vs Sturm isolation on 100 random quartics", 60.0,
       criterion_quartic},
      {"12. byte-identical trace JSON and SVG over the script corpus", 60.0,
       criterion_determinism},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && secs <= c.limit_s;
    if (!ok) ++failures;
    std::printf("[%s] %-66s %6.2fs / %gs%s%s\n", ok ? "PASS" : "FAIL", c.name, secs,
                c.limit_s, error.empty() ? "" : " -- ", error.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all 12 criteria passed\n");
  return failures == 0 ? 0 : 1;
}
