#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace origami {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Dyadic rational m * 2^e, kept canonical (m odd or zero; e = 0 when m = 0).
struct Dyadic {
  Integer m;
  std::int64_t e = 0;

  Dyadic() = default;
  Dyadic(Integer mant, std::int64_t exp);
  explicit Dyadic(long v) : Dyadic(Integer(v), 0) {}

  int sign() const { return m.sign(); }
  bool is_zero() const { return m.is_zero(); }
  Rational to_rational() const;
  std::string str() const;

  Dyadic operator-() const;
  // Exact ring operations (dyadics are closed under these).
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }

  // Bit length of |m|; 0 for zero.
  std::int64_t mant_bits() const;
  // Directed rounding to at most prec mantissa bits.
  Dyadic round_down(std::int64_t prec) const;  // toward -inf
  Dyadic round_up(std::int64_t prec) const;    // toward +inf

  static Dyadic from_rational_down(const Rational& r, std::int64_t prec);
  static Dyadic from_rational_up(const Rational& r, std::int64_t prec);
  // floor / ceil of sqrt within prec bits; requires value >= 0.
  Dyadic sqrt_down(std::int64_t prec) const;
  Dyadic sqrt_up(std::int64_t prec) const;
  // Directed real cube root (any sign).
  Dyadic cbrt_down(std::int64_t prec) const;
  Dyadic cbrt_up(std::int64_t prec) const;
  // Directed division.
  static Dyadic div_down(const Dyadic& a, const Dyadic& b, std::int64_t prec);
  static Dyadic div_up(const Dyadic& a, const Dyadic& b, std::int64_t prec);
  // Power of two 2^k.
  static Dyadic pow2(std::int64_t k) { return Dyadic(Integer(1), k); }

  double to_double() const;
};

// Closed interval [lo, hi] with dyadic endpoints, lo <= hi.
struct DyadicInterval {
  Dyadic lo, hi;

  DyadicInterval() = default;
  DyadicInterval(Dyadic l, Dyadic h);
  static DyadicInterval point(const Dyadic& d) { return {d, d}; }

  Dyadic width() const { return hi - lo; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool strictly_positive() const { return lo.sign() > 0; }
  bool strictly_negative() const { return hi.sign() < 0; }
  // max(|lo|, |hi|) < 2^k ?
  bool magnitude_below(std::int64_t k) const;
  bool contains(const Dyadic& d) const { return lo <= d && d <= hi; }
  bool contains(const DyadicInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  Dyadic midpoint() const;  // exact (m_lo + m_hi)/2

  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
};

DyadicInterval iv_add(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
DyadicInterval iv_sub(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
DyadicInterval iv_mul(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
// Requires 0 not in b.
DyadicInterval iv_div(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
DyadicInterval iv_neg(const DyadicInterval& a);
// Requires the true value to be >= 0; negative lower endpoints are clamped.
DyadicInterval iv_sqrt(const DyadicInterval& a, std::int64_t prec);
DyadicInterval iv_cbrt(const DyadicInterval& a, std::int64_t prec);

// floor(cbrt(n)) for n >= 0.
Integer icbrt(const Integer& n);

}  // namespace origami
