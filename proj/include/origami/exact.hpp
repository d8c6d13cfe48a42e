#pragma once

#include "origami/dyadic.hpp"
#include "origami/errors.hpp"

#include <memory>
#include <string>
#include <vector>

namespace origami {

namespace detail {
struct Node;
}

// Budget for exact sign decisions; see ExactReal::sign().
struct SignBudget {
  std::int64_t max_bits = 4096;          // precision cap
  double max_degree = 65536.0;           // cap on the degree-bound product (2^16)
};

SignBudget& sign_budget();  // process-wide, mutable for tests

// Lazy-exact real number: an immutable expression DAG over rationals closed
// under +, -, *, /, sqrt of nonnegatives, real cbrt, and isolated real cubic
// roots.  Values are immutable; cached enclosures only ever narrow, so shared
// values are safe to use from multiple threads.
class ExactReal {
 public:
  ExactReal();  // zero
  ExactReal(long v);
  ExactReal(int v) : ExactReal(static_cast<long>(v)) {}
  ExactReal(const Rational& v);
  ExactReal(const Integer& v) : ExactReal(Rational(v)) {}

  static ExactReal sqrt(const ExactReal& x);  // requires sign(x) >= 0
  static ExactReal cbrt(const ExactReal& x);

  // Exact sign in {-1, 0, +1}; throws PrecisionExhausted past the budget.
  int sign() const;
  // Enclosure of width <= 2^-bits; refinement is monotone.
  DyadicInterval refine(std::int64_t bits) const;

  bool is_rational() const;
  Rational rational_value() const;  // only when is_rational()

  std::string str() const;                       // exact expression text
  std::string decimal(unsigned digits) const;    // "≈d.ddd…", round half even
  double approx() const;                         // for rendering only

  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
  ExactReal operator-() const;

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return (a - b).sign() == 0;
  }
  friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }
  friend bool operator<(const ExactReal& a, const ExactReal& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const ExactReal& a, const ExactReal& b) { return b < a; }
  friend bool operator<=(const ExactReal& a, const ExactReal& b) { return !(b < a); }
  friend bool operator>=(const ExactReal& a, const ExactReal& b) { return !(a < b); }

 private:
  explicit ExactReal(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
  friend struct detail::Node;
  friend class ExactRealAccess;
};

// -1, 0, +1 ordering of a and b by value.
inline int compare(const ExactReal& a, const ExactReal& b) { return (a - b).sign(); }

struct RootMult {
  ExactReal root;
  int multiplicity = 1;
};

// All distinct real roots of t^3 + p t + q, sorted ascending.
std::vector<RootMult> cubic_roots(const ExactReal& p, const ExactReal& q);

}  // namespace origami
