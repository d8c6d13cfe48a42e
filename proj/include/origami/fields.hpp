#pragma once

#include "origami/exact.hpp"

#include <string>
#include <vector>

namespace origami::fields {

enum class Verdict {
  Thalian,
  NonThalian,
  DegreeConditionPass,
  DegreeConditionFail,
  TotallyRealWitness,
  NotTotallyReal,
};

const char* verdict_name(Verdict v);

struct FieldClass {
  Verdict verdict;
  std::string certificate;  // independently checkable explanation
};

// Classify z = a + b i with rational a and b^2 = bsq (b rational or the surd
// sqrt(bsq)): Thalian exactly when b itself is rational.  Throws
// UnsupportedTower for inconsistent or out-of-scope inputs.
FieldClass thalian_classify(const Rational& a, const Rational& bsq, bool b_is_rational);

// e^(i 2 pi / m) is Thalian iff 4 divides m; requires m >= 3.
bool root_of_unity_thalian(long m);

// Is sqrt(p + q sqrt(r)) totally real?  Accepts iff the conjugate p - q sqrt(r)
// is also nonnegative; requires r >= 0 and p + q sqrt(r) >= 0.
FieldClass totally_real_quadratic(const Rational& p, const Rational& q,
                                  const Rational& r);

// Necessary origami-degree condition on the degree of an irreducible minimal
// polynomial (coefficients ascending, constant term first): passes iff the
// degree is of the form 2^a 3^b.  Throws ReduciblePolynomial if the input
// factors over the rationals.
FieldClass origami_degree_check(const std::vector<Rational>& coeffs);

struct NgonResult {
  bool constructible;
  std::string certificate;  // the factorization backing the verdict
};

// Regular n-gon criterion: n = 2^a 3^b P1...Ps with distinct primes Pi > 3,
// each Pi - 1 having no prime factor other than 2 and 3.  3 <= n <= 10^9.
NgonResult ngon_constructible(long n);

}  // namespace origami::fields
