#include "origami/fields.hpp"

#include <algorithm>
#include <sstream>

namespace origami::fields {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

bool is_perfect_square(const Integer& n) {
  if (n.sign() < 0) return false;
  Integer r = sqrt(n);
  return r * r == n;
}

// b^2 = v with b rational demands numerator and denominator both squares
bool rational_square(const Rational& v) {
  return is_perfect_square(numerator(v)) && is_perfect_square(denominator(v));
}

std::string rat_str(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// --- polynomial helpers over the rationals (ascending coefficients) ---------

using Poly = std::vector<Rational>;

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// true when g divides f exactly
bool divides(Poly f, const Poly& g) {
  if (g.empty()) return false;
  while (f.size() >= g.size()) {
    Rational q = f.back() / g.back();
    std::size_t off = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= q * g[i];
    f = trim(f);
    if (f.empty()) return true;
  }
  return false;
}

// Lagrange interpolation through (xs[i], ys[i])
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      // basis *= (x - xs[j])
      Poly next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    Rational scale = ys[i] / denom;
    if (basis.size() > acc.size()) acc.resize(basis.size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
  }
  return trim(acc);
}

std::vector<Integer> divisors_signed(const Integer& v) {
  Integer a = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    Integer e = a / d;
    out.push_back(d);
    out.push_back(-d);
    if (e != d) {
      out.push_back(e);
      out.push_back(-e);
    }
    if (out.size() > 512) throw OutOfRange("irreducibility check: value has too many divisors");
  }
  return out;
}

// Kronecker's method: search for a nonconstant proper factor of f over Q by
// interpolating candidate factors through divisor tuples of f's values at
// small integers.  Returns true when f (nonconstant, ascending) is reducible.
bool kronecker_reducible(const Poly& f) {
  std::size_t n = f.size() - 1;
  if (n <= 1) return false;
  // evaluation points 0, 1, -1, 2, -2, ...
  std::vector<Rational> xs;
  for (long k = 0; xs.size() <= n / 2; ++k)
    xs.push_back(Rational(k % 2 == 0 ? -(k / 2) : (k + 1) / 2));
  // rescale to integer values for divisor enumeration
  Integer lcm_den = 1;
  for (auto& c : f) lcm_den = lcm_den / gcd(lcm_den, denominator(c)) * denominator(c);
  std::vector<Integer> vals;
  for (auto& x : xs) {
    Rational v = eval(f, x) * Rational(lcm_den);
    if (v.is_zero()) return true;  // rational root => linear factor
    vals.push_back(numerator(v));
  }
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<std::vector<Integer>> divs;
    for (std::size_t i = 0; i <= d; ++i) divs.push_back(divisors_signed(vals[i]));
    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      std::vector<Rational> ys;
      for (std::size_t i = 0; i <= d; ++i) ys.push_back(Rational(divs[i][idx[i]]));
      Poly g = interpolate({xs.begin(), xs.begin() + long(d) + 1}, ys);
      if (g.size() == d + 1 && divides(f, g)) return true;
      std::size_t i = 0;
      for (; i <= d; ++i) {
        if (++idx[i] < divs[i].size()) break;
        idx[i] = 0;
      }
      if (i > d) break;
    }
  }
  return false;
}

bool only_factors_2_3(long v) {
  while (v % 2 == 0) v /= 2;
  while (v % 3 == 0) v /= 3;
  return v == 1;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Thalian: return "thalian";
    case Verdict::NonThalian: return "non-thalian";
    case Verdict::DegreeConditionPass: return "degree-condition-pass";
    case Verdict::DegreeConditionFail: return "degree-condition-fail";
    case Verdict::TotallyRealWitness: return "totally-real";
    case Verdict::NotTotallyReal: return "not-totally-real";
  }
  return "?";
}

FieldClass thalian_classify(const Rational& a, const Rational& bsq, bool b_is_rational) {
  if (bsq.sign() <= 0) throw UnsupportedTower();
  bool square = rational_square(bsq);
  if (b_is_rational && !square) throw UnsupportedTower();
  if (b_is_rational || square) {
    return {Verdict::Thalian,
            "b = sqrt(" + rat_str(bsq) + ") is rational, so b lies in Q(a, b^2); "
            "Pi[z] = Q(a, b, i)"};
  }
  return {Verdict::NonThalian,
          "b = sqrt(" + rat_str(bsq) + ") is irrational, so b is not in Q(a, b^2) = "
          "Q(" + rat_str(a) + ", " + rat_str(bsq) + "); Pi[z] = Q(a, b^2) + Q(a, b^2)"
          " b i"};
}

bool root_of_unity_thalian(long m) {
  if (m < 3) throw OutOfRange("root-of-unity order must be >= 3");
  return m % 4 == 0;
}

FieldClass totally_real_quadratic(const Rational& p, const Rational& q,
                                  const Rational& r) {
  if (r.sign() < 0) throw NegativeRadicand();
  ExactReal root_r = ExactReal::sqrt(ExactReal(r));
  ExactReal value = ExactReal(p) + ExactReal(q) * root_r;
  if (value.sign() < 0) throw NegativeRadicand();
  ExactReal conj = ExactReal(p) - ExactReal(q) * root_r;
  int cs = conj.sign();
  std::string base = "sqrt(" + rat_str(p) + " + (" + rat_str(q) + ")sqrt(" +
                     rat_str(r) + "))";
  if (cs >= 0) {
    return {Verdict::TotallyRealWitness,
            base + " is totally real: the conjugate " + rat_str(p) + " - (" +
                rat_str(q) + ")sqrt(" + rat_str(r) + ") has sign " +
                (cs > 0 ? "+1" : "0")};
  }
  return {Verdict::NotTotallyReal,
          base + " is not totally real: the conjugate sqrt(" + rat_str(p) + " - (" +
              rat_str(q) + ")sqrt(" + rat_str(r) + ")) is not real (radicand sign -1)"};
}

FieldClass origami_degree_check(const std::vector<Rational>& coeffs) {
  Poly f = trim(coeffs);
  if (f.size() < 2) throw OutOfRange("minimal polynomial must have degree >= 1");
  if (kronecker_reducible(f)) throw ReduciblePolynomial();
  std::size_t degree = f.size() - 1;
  std::size_t rest = degree;
  int a = 0, b = 0;
  while (rest % 2 == 0) rest /= 2, ++a;
  while (rest % 3 == 0) rest /= 3, ++b;
  std::string deg = std::to_string(degree);
  if (rest == 1) {
    return {Verdict::DegreeConditionPass,
            "irreducible of degree " + deg + " = 2^" + std::to_string(a) + " * 3^" +
                std::to_string(b) +
                "; the 2^a 3^b degree condition is necessary only, not sufficient"};
  }
  return {Verdict::DegreeConditionFail,
          "irreducible of degree " + deg + "; the factor " + std::to_string(rest) +
              " is coprime to 6, so the degree is not of the form 2^a 3^b"};
}

NgonResult ngon_constructible(long n) {
  if (n < 3 || n > 1000000000L) throw OutOfRange("n-gon query outside [3, 10^9]");
  long rest = n;
  int a = 0, b = 0;
  while (rest % 2 == 0) rest /= 2, ++a;
  while (rest % 3 == 0) rest /= 3, ++b;
  std::ostringstream cert;
  cert << n << " = 2^" << a << " * 3^" << b;
  bool ok = true;
  for (long p = 5; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) rest /= p, ++e;
    cert << " * " << p << (e > 1 ? "^" + std::to_string(e) : "");
    if (e > 1) {
      cert << " [prime " << p << " repeated]";
      ok = false;
    } else if (!only_factors_2_3(p - 1)) {
      cert << " [" << p << " - 1 = " << (p - 1) << " has a prime factor > 3]";
      ok = false;
    } else {
      cert << " (" << p << " - 1 = " << (p - 1) << " = 2^c 3^d)";
    }
  }
  if (rest > 1) {
    // rest is prime (no factor up to its square root)
    cert << " * " << rest;
    if (!only_factors_2_3(rest - 1)) {
      cert << " [" << rest << " - 1 = " << (rest - 1) << " has a prime factor > 3]";
      ok = false;
    } else {
      cert << " (" << rest << " - 1 = " << (rest - 1) << " = 2^c 3^d)";
    }
  }
  return {ok, cert.str()};
}

}  // namespace origami::fields
