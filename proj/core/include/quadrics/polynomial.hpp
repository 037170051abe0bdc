#pragma once

#include <vector>

#include "quadrics/rational.hpp"

namespace quadrics {

/// Dense univariate polynomial over the rationals, ascending coefficients,
/// normalized so that the leading coefficient is nonzero (zero polynomial has
/// an empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean remainder (field coefficients, exact).
  Polynomial remainder(const Polynomial& divisor) const;

  /// Monic multiple of gcd(this, other).
  Polynomial gcd(const Polynomial& other) const;

  bool is_squarefree() const;

  /// True when gcd(p, p') still has a real root, i.e. some REAL root of p is
  /// repeated. Multiple complex factors (such as powers of 1 + t^2 picked up
  /// from a rational parametrization) do not count.
  bool has_repeated_real_root() const;

  /// Cauchy bound: every real root lies in (-B, B).
  Rational root_bound() const;

 private:
  std::vector<Rational> c_;
};

/// One isolated real root: either an exact rational root (lo == hi) or an
/// open interval (lo, hi) with a single sign change and no root at either
/// endpoint.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Sturm chain of p (p squarefree not required; chain is of p / gcd(p, p')).
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots in (a, b], by Sturm sign variations.
int count_roots_in(const std::vector<Polynomial>& chain, const Rational& a,
                   const Rational& b);

/// Number of distinct real roots.
int count_real_roots(const Polynomial& p);

/// Disjoint, separated isolating intervals for all distinct real roots of a
/// nonzero polynomial, sorted increasingly. Consecutive intervals have a gap
/// between them (hi_i < lo_{i+1}), so strictly-between sample points exist.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

}  // namespace quadrics
