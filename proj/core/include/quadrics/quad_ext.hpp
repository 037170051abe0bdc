#pragma once

#include <optional>

#include "quadrics/rational.hpp"

namespace quadrics {

/// Element a + s*b of the real quadratic field Q(s), s = sqrt(d) with d a
/// positive rational that is NOT a rational square. Under that hypothesis s
/// is irrational, the representation is unique, and the ring is a field, so
/// exact Gaussian elimination goes through unchanged.
///
/// Values constructed from plain integers or rationals carry no d ("scalar"
/// embedding); mixed operations adopt the other operand's d. This lets
/// generic code write F(0), F(1) without knowing the field discriminant.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0) {}
  QuadExt(int v) : a_(v), b_(0) {}  // NOLINT: generic code needs F(0), F(1)
  explicit QuadExt(Rational v) : a_(std::move(v)), b_(0) {}
  QuadExt(Rational a, Rational b, Rational d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  /// d of the ambient field; nullopt for scalar (pure rational) values.
  const std::optional<Rational>& discriminant() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  void adopt(const QuadExt& other);

  Rational a_, b_;
  std::optional<Rational> d_;
};

/// Exact sign of a + s*b (s = sqrt(d) > 0): decided by comparing a^2 against
/// d*b^2 when the two terms oppose each other. Never approximates.
int sign_of(const QuadExt& value);

inline bool is_zero(const QuadExt& v) { return v.is_zero(); }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

}  // namespace quadrics
