#include "origami/dyadic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace origami {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::msb;

std::int64_t bits_of(const Integer& v) {
  if (v.is_zero()) return 0;
  return static_cast<std::int64_t>(msb(abs(v))) + 1;
}

}  // namespace

Dyadic::Dyadic(Integer mant, std::int64_t exp) : m(std::move(mant)), e(exp) {
  if (m.is_zero()) {
    e = 0;
    return;
  }
  std::size_t tz = lsb(abs(m));
  if (tz > 0) {
    m >>= tz;
    e += static_cast<std::int64_t>(tz);
  }
}

Rational Dyadic::to_rational() const {
  if (e >= 0) return Rational(m << e);
  return Rational(m, Integer(1) << (-e));
}

std::string Dyadic::str() const {
  // canonical "m*2^e" form; integers render plainly
  if (e >= 0) return Integer(m << e).str();
  return m.str() + "*2^" + std::to_string(e);
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.m = -m;
  r.e = e;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.e, b.e);
  Integer ma = a.m << (a.e - e);
  Integer mb = b.m << (b.e - e);
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.m * b.m, a.e + b.e);
}

bool operator<(const Dyadic& a, const Dyadic& b) { return (b - a).sign() > 0; }

bool operator==(const Dyadic& a, const Dyadic& b) { return a.m == b.m && a.e == b.e; }

std::int64_t Dyadic::mant_bits() const { return bits_of(m); }

Dyadic Dyadic::round_down(std::int64_t prec) const {
  std::int64_t nb = mant_bits();
  if (nb <= prec) return *this;
  std::int64_t drop = nb - prec;
  if (m.sign() > 0) return Dyadic(m >> drop, e + drop);
  Integer a = -m;
  Integer q = a >> drop;
  if ((q << drop) != a) q += 1;  // ceil on the absolute value = floor of the negative
  return Dyadic(-q, e + drop);
}

Dyadic Dyadic::round_up(std::int64_t prec) const { return -((-*this).round_down(prec)); }

Dyadic Dyadic::from_rational_down(const Rational& r, std::int64_t prec) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (num.is_zero()) return Dyadic();
  // scale so the quotient carries ~prec+1 bits
  std::int64_t shift = prec + 1 - (bits_of(num) - bits_of(den));
  if (shift < 0) shift = 0;
  Integer q = (num << shift) / den;
  if (num.sign() < 0 && q * den != (num << shift)) q -= 1;  // floor
  return Dyadic(q, -shift);
}

Dyadic Dyadic::from_rational_up(const Rational& r, std::int64_t prec) {
  return -from_rational_down(-r, prec);
}

Dyadic Dyadic::sqrt_down(std::int64_t prec) const {
  assert(sign() >= 0);
  if (is_zero()) return Dyadic();
  // shift to 2*prec+2 bits with an even exponent, take floor isqrt
  std::int64_t shift = 2 * prec + 2 - mant_bits();
  if (shift < 0) shift = 0;
  if (((e - shift) & 1) != 0) shift += 1;
  Integer n = m << shift;
  Integer s = boost::multiprecision::sqrt(n);
  return Dyadic(s, (e - shift) / 2);
}

Dyadic Dyadic::sqrt_up(std::int64_t prec) const {
  assert(sign() >= 0);
  if (is_zero()) return Dyadic();
  std::int64_t shift = 2 * prec + 2 - mant_bits();
  if (shift < 0) shift = 0;
  if (((e - shift) & 1) != 0) shift += 1;
  Integer n = m << shift;
  Integer s = boost::multiprecision::sqrt(n);
  if (s * s != n) s += 1;
  return Dyadic(s, (e - shift) / 2);
}

Integer icbrt(const Integer& n) {
  assert(n.sign() >= 0);
  if (n.is_zero()) return Integer(0);
  std::int64_t nb = bits_of(n);
  Integer x = Integer(1) << (nb / 3 + 1);
  // Newton iteration for floor cbrt, monotone decreasing once above the root
  while (true) {
    Integer x2 = x * x;
    Integer y = (2 * x + n / x2) / 3;
    if (y >= x) break;
    x = y;
  }
  while (x * x * x > n) x -= 1;
  return x;
}

Dyadic Dyadic::cbrt_down(std::int64_t prec) const {
  if (is_zero()) return Dyadic();
  if (sign() < 0) return -((-*this).cbrt_up(prec));
  std::int64_t shift = 3 * prec + 3 - mant_bits();
  if (shift < 0) shift = 0;
  std::int64_t rem = ((e - shift) % 3 + 3) % 3;
  shift += rem;  // make e - shift divisible by 3
  Integer n = m << shift;
  Integer s = icbrt(n);
  return Dyadic(s, (e - shift) / 3);
}

Dyadic Dyadic::cbrt_up(std::int64_t prec) const {
  if (is_zero()) return Dyadic();
  if (sign() < 0) return -((-*this).cbrt_down(prec));
  std::int64_t shift = 3 * prec + 3 - mant_bits();
  if (shift < 0) shift = 0;
  std::int64_t rem = ((e - shift) % 3 + 3) % 3;
  shift += rem;
  Integer n = m << shift;
  Integer s = icbrt(n);
  if (s * s * s != n) s += 1;
  return Dyadic(s, (e - shift) / 3);
}

Dyadic Dyadic::div_down(const Dyadic& a, const Dyadic& b, std::int64_t prec) {
  assert(!b.is_zero());
  if (a.is_zero()) return Dyadic();
  std::int64_t shift = prec + 1 - (a.mant_bits() - b.mant_bits());
  if (shift < 0) shift = 0;
  Integer num = a.m << shift;
  Integer q = num / b.m;
  if ((num.sign() < 0) != (b.m.sign() < 0) && q * b.m != num) q -= 1;  // floor
  return Dyadic(q, a.e - b.e - shift);
}

Dyadic Dyadic::div_up(const Dyadic& a, const Dyadic& b, std::int64_t prec) {
  return -div_down(-a, b, prec);
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  Dyadic r = round_down(64);
  return static_cast<double>(r.m.convert_to<double>()) * std::ldexp(1.0, static_cast<int>(r.e));
}

DyadicInterval::DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
  assert(!(hi < lo));
}

bool DyadicInterval::magnitude_below(std::int64_t k) const {
  Dyadic bound = Dyadic::pow2(k);
  return (-bound) < lo && hi < bound;
}

Dyadic DyadicInterval::midpoint() const {
  Dyadic s = lo + hi;
  return Dyadic(s.m, s.e - 1);
}

DyadicInterval iv_add(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  return {(a.lo + b.lo).round_down(prec), (a.hi + b.hi).round_up(prec)};
}

DyadicInterval iv_sub(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  return {(a.lo - b.hi).round_down(prec), (a.hi - b.lo).round_up(prec)};
}

DyadicInterval iv_mul(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Dyadic lo = std::min({p1, p2, p3, p4}, [](const Dyadic& x, const Dyadic& y) { return x < y; });
  Dyadic hi = std::max({p1, p2, p3, p4}, [](const Dyadic& x, const Dyadic& y) { return x < y; });
  return {lo.round_down(prec), hi.round_up(prec)};
}

DyadicInterval iv_div(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  assert(!b.contains_zero());
  Dyadic q1 = Dyadic::div_down(a.lo, b.lo, prec);
  Dyadic q2 = Dyadic::div_down(a.lo, b.hi, prec);
  Dyadic q3 = Dyadic::div_down(a.hi, b.lo, prec);
  Dyadic q4 = Dyadic::div_down(a.hi, b.hi, prec);
  Dyadic lo = std::min({q1, q2, q3, q4}, [](const Dyadic& x, const Dyadic& y) { return x < y; });
  Dyadic u1 = Dyadic::div_up(a.lo, b.lo, prec);
  Dyadic u2 = Dyadic::div_up(a.lo, b.hi, prec);
  Dyadic u3 = Dyadic::div_up(a.hi, b.lo, prec);
  Dyadic u4 = Dyadic::div_up(a.hi, b.hi, prec);
  Dyadic hi = std::max({u1, u2, u3, u4}, [](const Dyadic& x, const Dyadic& y) { return x < y; });
  return {lo, hi};
}

DyadicInterval iv_neg(const DyadicInterval& a) { return {-a.hi, -a.lo}; }

DyadicInterval iv_sqrt(const DyadicInterval& a, std::int64_t prec) {
  Dyadic lo = a.lo.sign() < 0 ? Dyadic() : a.lo.sqrt_down(prec);
  Dyadic hi = a.hi.sign() < 0 ? Dyadic() : a.hi.sqrt_up(prec);
  return {lo, hi};
}

DyadicInterval iv_cbrt(const DyadicInterval& a, std::int64_t prec) {
  return {a.lo.cbrt_down(prec), a.hi.cbrt_up(prec)};
}

}  // namespace origami
