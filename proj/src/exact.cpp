#include "origami/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <mutex>
#include <optional>
#include <unordered_set>

namespace origami {

namespace detail {

enum class Kind { Const, Add, Sub, Mul, Div, Neg, Sqrt, Cbrt, CubicRoot };

struct Node {
  Kind kind;
  Rational value;  // Const only
  std::shared_ptr<const Node> a, b;

  // BFMSS-style bit-length bounds on the conjugates of the numerator /
  // denominator algebraic integers; always rounded up, so sound.
  double log_u = 0.0;
  double log_l = 0.0;
  bool radical_free = true;

  // CubicRoot payload: root of t^3 + a*t + b inside `bracket`; the cubic has a
  // strict sign change across the bracket, f(lo) has sign `f_lo_sign`.
  DyadicInterval initial_bracket;
  mutable DyadicInterval bracket;
  int f_lo_sign = 0;

  mutable std::mutex mu;
  mutable std::int64_t cached_prec = -1;
  mutable DyadicInterval cached;
  mutable std::optional<Rational> exact_value;
  mutable std::atomic<int> cached_sign{2};  // 2 = unknown
};

using NodePtr = std::shared_ptr<const Node>;

}  // namespace detail

using detail::Kind;
using detail::Node;
using detail::NodePtr;

class ExactRealAccess {
 public:
  static ExactReal make(NodePtr n) { return ExactReal(std::move(n)); }
  static const NodePtr& node(const ExactReal& x) { return x.node_; }
};

namespace {

double bits_bound(const Integer& v) {
  if (v.is_zero()) return 0.0;
  return static_cast<double>(msb(boost::multiprecision::abs(v))) + 1.0;
}

NodePtr make_const(const Rational& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = v;
  n->log_u = bits_bound(numerator(v));
  n->log_l = bits_bound(denominator(v));
  n->radical_free = true;
  n->exact_value = v;
  return n;
}

Rational rational_eval(const Node* n);
NodePtr make_unary(Kind k, NodePtr a);

bool is_const(const NodePtr& n, long v) {
  return n->kind == Kind::Const && n->value == v;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
  // fold radical-free operands immediately: this keeps separation bounds tied
  // to the value rather than to the shape of the expression that produced it
  if (a->radical_free && b->radical_free) {
    Rational x = rational_eval(a.get()), y = rational_eval(b.get());
    switch (k) {
      case Kind::Add: return make_const(x + y);
      case Kind::Sub: return make_const(x - y);
      case Kind::Mul: return make_const(x * y);
      case Kind::Div: return make_const(x / y);  // zero divisor rejected upstream
      default: assert(false);
    }
  }
  // absorb constant identities so sparse sums and unit scales do not inflate
  // the separation bounds
  switch (k) {
    case Kind::Add:
      if (is_const(a, 0)) return b;
      if (is_const(b, 0)) return a;
      break;
    case Kind::Sub:
      if (is_const(b, 0)) return a;
      if (is_const(a, 0)) return make_unary(Kind::Neg, std::move(b));
      break;
    case Kind::Mul:
      if (is_const(a, 0) || is_const(b, 0)) return make_const(Rational(0));
      if (is_const(a, 1)) return b;
      if (is_const(b, 1)) return a;
      if (is_const(a, -1)) return make_unary(Kind::Neg, std::move(b));
      if (is_const(b, -1)) return make_unary(Kind::Neg, std::move(a));
      break;
    case Kind::Div:
      if (is_const(a, 0)) return make_const(Rational(0));
      if (is_const(b, 1)) return a;
      if (is_const(b, -1)) return make_unary(Kind::Neg, std::move(a));
      break;
    default:
      break;
  }
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->radical_free = false;
  switch (k) {
    case Kind::Add:
    case Kind::Sub:
      n->log_u = std::max(a->log_u + b->log_l, b->log_u + a->log_l) + 1.0;
      n->log_l = a->log_l + b->log_l;
      break;
    case Kind::Mul:
      n->log_u = a->log_u + b->log_u;
      n->log_l = a->log_l + b->log_l;
      break;
    case Kind::Div:
      n->log_u = a->log_u + b->log_l;
      n->log_l = a->log_l + b->log_u;
      break;
    default:
      assert(false);
  }
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

// exact integer root if v = r^deg for some integer r, else nullopt
std::optional<Integer> perfect_root(const Integer& v, int deg) {
  if (v.is_zero()) return Integer(0);
  if (v < 0) {
    if (deg % 2 == 0) return std::nullopt;
    auto r = perfect_root(-v, deg);
    if (r) return -*r;
    return std::nullopt;
  }
  Integer r = deg == 2 ? Integer(boost::multiprecision::sqrt(v)) : icbrt(v);
  return boost::multiprecision::pow(r, deg) == v ? std::optional<Integer>(r) : std::nullopt;
}

NodePtr make_unary(Kind k, NodePtr a) {
  if (k == Kind::Neg && a->kind == Kind::Neg) return a->a;
  if (a->radical_free) {
    Rational v = rational_eval(a.get());
    if (k == Kind::Neg) return make_const(-v);
    int deg = k == Kind::Sqrt ? 2 : 3;
    auto rn = perfect_root(numerator(v), deg);
    auto rd = perfect_root(denominator(v), deg);
    if (rn && rd) return make_const(Rational(*rn, *rd));
  }
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->radical_free = false;
  switch (k) {
    case Kind::Neg:
      n->log_u = a->log_u;
      n->log_l = a->log_l;
      break;
    case Kind::Sqrt:
      n->log_u = (a->log_u + a->log_l) / 2.0 + 1.0;
      n->log_l = a->log_l;
      break;
    case Kind::Cbrt:
      n->log_u = (a->log_u + 2.0 * a->log_l) / 3.0 + 1.0;
      n->log_l = a->log_l;
      break;
    default:
      assert(false);
  }
  n->a = std::move(a);
  return n;
}

NodePtr make_cubic_root(NodePtr p, NodePtr q, const DyadicInterval& bracket, int f_lo_sign) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::CubicRoot;
  n->radical_free = false;
  // t = s / (psi_p * psi_q) with s a root of a monic cubic whose coefficient
  // conjugates are bounded via the children's bounds (Cauchy bound).
  n->log_u = std::max(p->log_u + q->log_l, 2.0 * p->log_l + q->log_l + q->log_u) + 1.0;
  n->log_l = p->log_l + q->log_l;
  n->a = std::move(p);
  n->b = std::move(q);
  n->initial_bracket = bracket;
  n->bracket = bracket;
  n->f_lo_sign = f_lo_sign;
  return n;
}

// ---- exact rational evaluation (radical-free subtrees) ----

Rational rational_eval(const Node* n) {
  {
    std::lock_guard<std::mutex> g(n->mu);
    if (n->exact_value) return *n->exact_value;
  }
  assert(n->radical_free);
  Rational r;
  switch (n->kind) {
    case Kind::Const: r = n->value; break;
    case Kind::Add: r = rational_eval(n->a.get()) + rational_eval(n->b.get()); break;
    case Kind::Sub: r = rational_eval(n->a.get()) - rational_eval(n->b.get()); break;
    case Kind::Mul: r = rational_eval(n->a.get()) * rational_eval(n->b.get()); break;
    case Kind::Div: r = rational_eval(n->a.get()) / rational_eval(n->b.get()); break;
    case Kind::Neg: r = -rational_eval(n->a.get()); break;
    default: assert(false);
  }
  std::lock_guard<std::mutex> g(n->mu);
  if (!n->exact_value) n->exact_value = r;
  return *n->exact_value;
}

int node_sign(const Node* n);

ExactReal wrap(NodePtr n) { return ExactRealAccess::make(std::move(n)); }

// sign of mid^3 + p*mid + q
int cubic_value_sign(const NodePtr& p, const NodePtr& q, const Dyadic& mid) {
  ExactReal t(mid.to_rational());
  ExactReal f = t * t * t + wrap(p) * t + wrap(q);
  return f.sign();
}

std::optional<DyadicInterval> eval(const Node* n, std::int64_t prec);
DyadicInterval intersect(const DyadicInterval& a, const DyadicInterval& b);

// Narrow a CubicRoot bracket to the requested width.  Interval Newton steps
// give quadratic convergence; while the derivative interval straddles zero
// (or a step fails to shrink the bracket) we fall back to exact-sign
// bisection, which always makes progress.
void narrow_cubic_bracket(const Node* n, std::int64_t target_bits) {
  while (true) {
    DyadicInterval br;
    int slo;
    {
      std::lock_guard<std::mutex> g(n->mu);
      br = n->bracket;
      slo = n->f_lo_sign;
    }
    if (br.width() <= Dyadic::pow2(-target_bits) || br.lo == br.hi) return;

    DyadicInterval next = br;
    bool newton_ok = false;
    const std::int64_t w = target_bits + 64;
    auto pv = eval(n->a.get(), w);
    auto qv = eval(n->b.get(), w);
    if (pv && qv) {
      // N(br) = m - f(m) / f'(br), f = t^3 + p t + q
      DyadicInterval deriv =
          iv_add(iv_mul(DyadicInterval::point(Dyadic(Integer(3), 0)), iv_mul(br, br, w), w),
                 *pv, w);
      if (!deriv.contains_zero()) {
        DyadicInterval m = DyadicInterval::point(br.midpoint());
        DyadicInterval fm = iv_add(iv_mul(iv_mul(m, m, w), m, w),
                                   iv_add(iv_mul(*pv, m, w), *qv, w), w);
        DyadicInterval cand = intersect(br, iv_sub(m, iv_div(fm, deriv, w), w));
        Dyadic half = br.width();
        half.e -= 1;
        if (cand.width() <= half) {
          next = cand;
          newton_ok = true;
        }
      }
    }
    if (!newton_ok) {
      Dyadic mid = br.midpoint();
      int sm = cubic_value_sign(n->a, n->b, mid);
      if (sm == 0) {
        next = DyadicInterval::point(mid);
      } else if (sm == slo) {
        next.lo = mid;
      } else {
        next.hi = mid;
      }
    }
    std::lock_guard<std::mutex> g(n->mu);
    // another thread may have narrowed further; keep the tighter bracket
    if (n->bracket.contains(next)) {
      n->bracket = next;
    }
  }
}

std::optional<DyadicInterval> eval_fresh(const Node* n, std::int64_t prec) {
  switch (n->kind) {
    case Kind::Const:
      return DyadicInterval{Dyadic::from_rational_down(n->value, prec),
                            Dyadic::from_rational_up(n->value, prec)};
    case Kind::Add: {
      auto a = eval(n->a.get(), prec), b = eval(n->b.get(), prec);
      if (!a || !b) return std::nullopt;
      return iv_add(*a, *b, prec);
    }
    case Kind::Sub: {
      auto a = eval(n->a.get(), prec), b = eval(n->b.get(), prec);
      if (!a || !b) return std::nullopt;
      return iv_sub(*a, *b, prec);
    }
    case Kind::Mul: {
      auto a = eval(n->a.get(), prec), b = eval(n->b.get(), prec);
      if (!a || !b) return std::nullopt;
      return iv_mul(*a, *b, prec);
    }
    case Kind::Div: {
      auto a = eval(n->a.get(), prec), b = eval(n->b.get(), prec);
      if (!a || !b) return std::nullopt;
      if (b->contains_zero()) return std::nullopt;  // retry at higher precision
      return iv_div(*a, *b, prec);
    }
    case Kind::Neg: {
      auto a = eval(n->a.get(), prec);
      if (!a) return std::nullopt;
      return iv_neg(*a);
    }
    case Kind::Sqrt: {
      auto a = eval(n->a.get(), prec);
      if (!a) return std::nullopt;
      return iv_sqrt(*a, prec);
    }
    case Kind::Cbrt: {
      auto a = eval(n->a.get(), prec);
      if (!a) return std::nullopt;
      return iv_cbrt(*a, prec);
    }
    case Kind::CubicRoot: {
      narrow_cubic_bracket(n, prec);
      std::lock_guard<std::mutex> g(n->mu);
      return n->bracket;
    }
  }
  return std::nullopt;
}

DyadicInterval intersect(const DyadicInterval& a, const DyadicInterval& b) {
  Dyadic lo = a.lo < b.lo ? b.lo : a.lo;
  Dyadic hi = a.hi < b.hi ? a.hi : b.hi;
  if (hi < lo) return a;  // rounding artifact; keep the older enclosure
  return {lo, hi};
}

std::optional<DyadicInterval> eval(const Node* n, std::int64_t prec) {
  {
    std::lock_guard<std::mutex> g(n->mu);
    if (n->cached_prec >= prec) return n->cached;
  }
  auto iv = eval_fresh(n, prec);
  if (!iv) return std::nullopt;
  std::lock_guard<std::mutex> g(n->mu);
  if (n->cached_prec < 0) {
    n->cached = *iv;
    n->cached_prec = prec;
  } else if (prec > n->cached_prec) {
    n->cached = intersect(*iv, n->cached);
    n->cached_prec = prec;
  }
  return n->cached;
}

// ---- separation bound ----

struct SepInfo {
  double degree = 1.0;   // product of radical degrees over distinct DAG nodes
  bool over_cap = false;
};

void collect_degree(const Node* n, std::unordered_set<const Node*>& seen, SepInfo& out,
                    double cap) {
  if (!seen.insert(n).second) return;
  if (n->kind == Kind::Sqrt) out.degree *= 2.0;
  if (n->kind == Kind::Cbrt || n->kind == Kind::CubicRoot) out.degree *= 3.0;
  if (out.degree > cap) {
    out.over_cap = true;
    return;
  }
  if (n->a) collect_degree(n->a.get(), seen, out, cap);
  if (n->b) collect_degree(n->b.get(), seen, out, cap);
}

// If x != 0 then |x| >= 2^-sep_bits.
std::int64_t separation_bits(const Node* n, bool* over_cap) {
  SepInfo info;
  std::unordered_set<const Node*> seen;
  collect_degree(n, seen, info, sign_budget().max_degree);
  *over_cap = info.over_cap;
  if (info.over_cap) return 0;
  double bits = (info.degree - 1.0) * n->log_u + n->log_l;
  return static_cast<std::int64_t>(std::ceil(bits)) + 2;
}

int interval_sign(const Node* n) {
  bool over_cap = false;
  std::int64_t sep = separation_bits(n, &over_cap);
  const std::int64_t cap = sign_budget().max_bits;
  std::int64_t prec = 64;
  for (;; prec *= 2) {
    // an enclosure tighter than the separation bound settles the zero case,
    // so never pay for much more precision than that
    if (!over_cap && prec > sep + 64 && prec / 2 < sep + 64) prec = sep + 64;
    if (prec > cap) prec = cap;
    auto iv = eval(n, prec);
    if (iv) {
      if (iv->strictly_positive()) return 1;
      if (iv->strictly_negative()) return -1;
      if (!over_cap && iv->magnitude_below(-sep)) return 0;
    }
    if (prec >= cap) throw PrecisionExhausted();
  }
}

int node_sign(const Node* n) {
  int c = n->cached_sign.load(std::memory_order_relaxed);
  if (c != 2) return c;
  int s = 0;
  if (n->radical_free) {
    s = rational_eval(n).sign();
  } else {
    switch (n->kind) {
      case Kind::Neg: s = -node_sign(n->a.get()); break;
      case Kind::Mul:
      case Kind::Div: s = node_sign(n->a.get()) * node_sign(n->b.get()); break;
      case Kind::Sqrt: s = node_sign(n->a.get()) > 0 ? 1 : 0; break;
      case Kind::Cbrt: s = node_sign(n->a.get()); break;
      case Kind::CubicRoot: {
        DyadicInterval br;
        {
          std::lock_guard<std::mutex> g(n->mu);
          br = n->bracket;
        }
        if (br.strictly_positive()) {
          s = 1;
        } else if (br.strictly_negative()) {
          s = -1;
        } else if (node_sign(n->b.get()) == 0) {
          s = 0;  // 0 is a root of t^3+pt+q and it lies in the isolating bracket
        } else {
          for (std::int64_t bits = 8;; bits *= 2) {
            narrow_cubic_bracket(n, bits);
            std::lock_guard<std::mutex> g(n->mu);
            if (n->bracket.strictly_positive()) { s = 1; break; }
            if (n->bracket.strictly_negative()) { s = -1; break; }
            if (n->bracket.lo == n->bracket.hi) { s = n->bracket.lo.sign(); break; }
          }
        }
        break;
      }
      default: s = interval_sign(n); break;
    }
  }
  n->cached_sign.store(s, std::memory_order_relaxed);
  return s;
}

std::int64_t magnitude_exp(const DyadicInterval& iv) {
  std::int64_t m1 = iv.lo.is_zero() ? INT64_MIN : iv.lo.mant_bits() + iv.lo.e;
  std::int64_t m2 = iv.hi.is_zero() ? INT64_MIN : iv.hi.mant_bits() + iv.hi.e;
  std::int64_t m = std::max(m1, m2);
  return m == INT64_MIN ? 0 : m;
}

}  // namespace

SignBudget& sign_budget() {
  static SignBudget budget;
  return budget;
}

ExactReal::ExactReal() : node_(make_const(Rational(0))) {}
ExactReal::ExactReal(long v) : node_(make_const(Rational(v))) {}
ExactReal::ExactReal(const Rational& v) : node_(make_const(v)) {}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  return ExactRealAccess::make(make_binary(Kind::Add, a.node_, b.node_));
}
ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  return ExactRealAccess::make(make_binary(Kind::Sub, a.node_, b.node_));
}
ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  return ExactRealAccess::make(make_binary(Kind::Mul, a.node_, b.node_));
}
ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  if (b.sign() == 0) throw DivisionByZero();
  return ExactRealAccess::make(make_binary(Kind::Div, a.node_, b.node_));
}
ExactReal ExactReal::operator-() const {
  return ExactRealAccess::make(make_unary(Kind::Neg, node_));
}

ExactReal ExactReal::sqrt(const ExactReal& x) {
  if (x.sign() < 0) throw NegativeRadicand();
  return ExactRealAccess::make(make_unary(Kind::Sqrt, x.node_));
}

ExactReal ExactReal::cbrt(const ExactReal& x) {
  return ExactRealAccess::make(make_unary(Kind::Cbrt, x.node_));
}

int ExactReal::sign() const { return node_sign(node_.get()); }

DyadicInterval ExactReal::refine(std::int64_t bits) const {
  if (bits < 1) bits = 1;
  if (node_->radical_free) {
    const Rational v = rational_eval(node_.get());
    return {Dyadic::from_rational_down(v, bits + 2),
            Dyadic::from_rational_up(v, bits + 2)};
  }
  const Dyadic target = Dyadic::pow2(-bits);
  for (std::int64_t prec = bits + 8;; prec *= 2) {
    auto iv = eval(node_.get(), prec);
    if (iv && iv->width() <= target) return *iv;
    if (prec > (std::int64_t(1) << 24)) throw PrecisionExhausted();
  }
}

bool ExactReal::is_rational() const { return node_->radical_free; }

Rational ExactReal::rational_value() const {
  assert(is_rational());
  return rational_eval(node_.get());
}

double ExactReal::approx() const { return refine(53).midpoint().to_double(); }

// ---- cubic roots ----

namespace {

// Dyadic power-of-two Cauchy bound M with f(-M) < 0 < f(M) for t^3 + pt + q.
Dyadic cauchy_bound(const ExactReal& p, const ExactReal& q) {
  std::int64_t ep = magnitude_exp(p.refine(2));
  std::int64_t eq = magnitude_exp(q.refine(2));
  std::int64_t k = std::max({ep, eq, std::int64_t(0)}) + 2;
  return Dyadic::pow2(k);
}

ExactReal cubic_root_node(const ExactReal& p, const ExactReal& q, const DyadicInterval& br,
                          int f_lo_sign) {
  return wrap(make_cubic_root(ExactRealAccess::node(p), ExactRealAccess::node(q), br,
                              f_lo_sign));
}

int sign_f_at(const ExactReal& p, const ExactReal& q, const Dyadic& t) {
  return cubic_value_sign(ExactRealAccess::node(p), ExactRealAccess::node(q), t);
}

void push_root(std::vector<RootMult>& out, const ExactReal& r, int mult) {
  for (auto& rm : out) {
    if (compare(rm.root, r) == 0) {
      rm.multiplicity += mult;
      return;
    }
  }
  out.push_back({r, mult});
}

std::vector<RootMult> sorted_roots(std::vector<RootMult> v) {
  std::sort(v.begin(), v.end(), [](const RootMult& x, const RootMult& y) {
    return compare(x.root, y.root) < 0;
  });
  return v;
}

// Roots once one exact root r0 is known: factor t^3+pt+q = (t-r0)(t^2+r0 t+(r0^2+p)).
std::vector<RootMult> roots_from_known(const ExactReal& p, const ExactReal& r0) {
  std::vector<RootMult> out;
  push_root(out, r0, 1);
  ExactReal disc = -(ExactReal(3) * r0 * r0) - ExactReal(4) * p;
  int sd = disc.sign();
  if (sd > 0) {
    ExactReal s = ExactReal::sqrt(disc);
    push_root(out, (-r0 + s) / ExactReal(2), 1);
    push_root(out, (-r0 - s) / ExactReal(2), 1);
  } else if (sd == 0) {
    push_root(out, -r0 / ExactReal(2), 2);
  }
  return sorted_roots(std::move(out));
}

}  // namespace

std::vector<RootMult> cubic_roots(const ExactReal& p, const ExactReal& q) {
  const int sp = p.sign();
  const int sq = q.sign();
  if (sq == 0) {
    if (sp == 0) return {{ExactReal(0), 3}};
    std::vector<RootMult> out{{ExactReal(0), 1}};
    if (sp < 0) {
      ExactReal r = ExactReal::sqrt(-p);
      out.push_back({r, 1});
      out.push_back({-r, 1});
    }
    return sorted_roots(std::move(out));
  }
  if (sp == 0) return {{ExactReal::cbrt(-q), 1}};

  ExactReal disc = ExactReal(4) * p * p * p + ExactReal(27) * q * q;
  const int sd = disc.sign();
  if (sd == 0) {
    // double root and a simple root, both in the coefficient field
    ExactReal r = -(ExactReal(3) * q) / (ExactReal(2) * p);
    ExactReal s = (ExactReal(3) * q) / p;
    std::vector<RootMult> out{{r, 2}, {s, 1}};
    return sorted_roots(std::move(out));
  }

  const Dyadic M = cauchy_bound(p, q);
  if (sd > 0) {
    // one real root
    DyadicInterval br{-M, M};
    return {{cubic_root_node(p, q, br, -1), 1}};
  }

  // three distinct real roots; p < 0, critical points at +-c, c = sqrt(-p/3)
  ExactReal c = ExactReal::sqrt(-p / ExactReal(3));
  for (std::int64_t bits = 8;; bits *= 2) {
    DyadicInterval civ = c.refine(bits);
    Dyadic d = civ.hi;
    int s_pos = sign_f_at(p, q, d);
    if (s_pos == 0) return roots_from_known(p, ExactReal(d.to_rational()));
    int s_neg = sign_f_at(p, q, -d);
    if (s_neg == 0) return roots_from_known(p, ExactReal((-d).to_rational()));
    if (s_pos < 0 && s_neg > 0) {
      Dyadic bound = M < d ? d + Dyadic(1) : M;
      std::vector<RootMult> out;
      out.push_back({cubic_root_node(p, q, {-bound, -d}, -1), 1});
      out.push_back({cubic_root_node(p, q, {-d, d}, 1), 1});
      out.push_back({cubic_root_node(p, q, {d, bound}, -1), 1});
      return out;  // already ascending
    }
  }
}

// ---- rendering ----

namespace {

std::string node_str(const Node* n) {
  switch (n->kind) {
    case Kind::Const: {
      const Rational& v = n->value;
      if (denominator(v) == 1) return numerator(v).str();
      return numerator(v).str() + "/" + denominator(v).str();
    }
    case Kind::Add: return "(" + node_str(n->a.get()) + " + " + node_str(n->b.get()) + ")";
    case Kind::Sub: return "(" + node_str(n->a.get()) + " - " + node_str(n->b.get()) + ")";
    case Kind::Mul: return "(" + node_str(n->a.get()) + "*" + node_str(n->b.get()) + ")";
    case Kind::Div: return "(" + node_str(n->a.get()) + "/" + node_str(n->b.get()) + ")";
    case Kind::Neg: return "(-" + node_str(n->a.get()) + ")";
    case Kind::Sqrt: return "sqrt(" + node_str(n->a.get()) + ")";
    case Kind::Cbrt: return "cbrt(" + node_str(n->a.get()) + ")";
    case Kind::CubicRoot:
      return "cubicroot(" + node_str(n->a.get()) + ", " + node_str(n->b.get()) + ", " +
             n->initial_bracket.str() + ")";
  }
  return "?";
}

Integer pow10(unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

// |r| rendered to `digits` significant figures, round half even.
std::string format_abs(const Rational& a, unsigned digits) {
  // decimal exponent k with 10^k <= a < 10^(k+1)
  long k = 0;
  Rational t = a;
  while (t >= 10) { t /= 10; ++k; }
  while (t < 1) { t *= 10; --k; }
  // scaled = round(a * 10^(digits-1-k)), half to even
  long shift = static_cast<long>(digits) - 1 - k;
  Rational scaled = a;
  if (shift >= 0) scaled *= Rational(pow10(static_cast<unsigned>(shift)));
  else scaled /= Rational(pow10(static_cast<unsigned>(-shift)));
  Integer ip = numerator(scaled) / denominator(scaled);
  Rational rem = scaled - Rational(ip);
  Rational half(1, 2);
  if (rem > half || (rem == half && (ip % 2) != 0)) ip += 1;
  std::string digs = ip.str();
  if (digs.size() > digits) {  // rounding carried into a new digit
    ++k;
    digs.pop_back();
  }
  std::string out;
  if (k >= 0 && k < static_cast<long>(digits)) {
    out = digs.substr(0, k + 1);
    std::string frac = digs.substr(k + 1);
    if (!frac.empty()) out += "." + frac;
  } else if (k < 0 && k >= -4) {
    out = "0." + std::string(static_cast<std::size_t>(-k - 1), '0') + digs;
  } else {
    out = digs.substr(0, 1);
    if (digs.size() > 1) out += "." + digs.substr(1);
    out += "e" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string ExactReal::str() const { return node_str(node_.get()); }

std::string ExactReal::decimal(unsigned digits) const {
  if (digits == 0) digits = 1;
  if (is_rational()) {
    Rational v = rational_value();
    if (v.is_zero()) return "≈0";
    std::string s = format_abs(boost::multiprecision::abs(v), digits);
    return std::string("≈") + (v.sign() < 0 ? "-" : "") + s;
  }
  // enough bits that the enclosure pins the printed digits
  std::int64_t bits = static_cast<std::int64_t>(digits) * 4 + 32;
  DyadicInterval iv = refine(bits);
  if (iv.contains_zero() && sign() == 0) return "≈0";
  while (iv.contains_zero()) {
    bits *= 2;
    iv = refine(bits);
  }
  Rational mid = iv.midpoint().to_rational();
  std::string s = format_abs(boost::multiprecision::abs(mid), digits);
  return std::string("≈") + (mid.sign() < 0 ? "-" : "") + s;
}

}  // namespace origami
