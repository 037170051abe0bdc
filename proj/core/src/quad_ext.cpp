#include "quadrics/quad_ext.hpp"

#include <stdexcept>
#include <utility>

namespace quadrics {

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(*d_) <= 0) throw std::logic_error("QuadExt: d must be positive");
  if (exact_sqrt(*d_))
    throw std::logic_error("QuadExt: d is a rational square; use Rational");
}

void QuadExt::adopt(const QuadExt& other) {
  if (!d_) {
    d_ = other.d_;
  } else if (other.d_ && *other.d_ != *d_) {
    throw std::logic_error("QuadExt: mixed discriminants");
  }
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  adopt(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  adopt(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  adopt(rhs);
  // (a1 + s b1)(a2 + s b2) = a1 a2 + d b1 b2 + s (a1 b2 + a2 b1)
  Rational a = a_ * rhs.a_;
  if (sgn(b_) != 0 && sgn(rhs.b_) != 0) a += *d_ * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + rhs.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  adopt(rhs);
  if (rhs.is_zero()) throw std::domain_error("QuadExt: division by zero");
  // 1/(a + s b) = (a - s b) / (a^2 - d b^2); the norm vanishes only at zero
  // because d is not a square.
  Rational norm = rhs.a_ * rhs.a_;
  if (sgn(rhs.b_) != 0) norm -= *d_ * rhs.b_ * rhs.b_;
  QuadExt conj = rhs;
  conj.b_ = -conj.b_;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  return *this;
}

int sign_of(const QuadExt& value) {
  const int sa = sgn(value.rational_part());
  const int sb = sgn(value.radical_part());
  if (sb == 0) return sa;
  if (sa == 0) return sb;           // s > 0
  if (sa == sb) return sa;          // both terms pull the same way
  // Opposite signs: compare a^2 with d b^2 in exact rationals.
  const Rational a2 = value.rational_part() * value.rational_part();
  const Rational db2 = *value.discriminant() * value.radical_part() *
                       value.radical_part();
  const int c = cmp(a2, db2);
  if (c == 0) return 0;  // unreachable for non-square d: it would force d = (a/b)^2
  return c > 0 ? sa : sb;
}

}  // namespace quadrics
