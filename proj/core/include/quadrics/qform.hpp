#pragma once

#include <initializer_list>
#include <vector>

#include "quadrics/linalg.hpp"
#include "quadrics/rational.hpp"

namespace quadrics {

/// Rational quadratic form q(x) = <x, Qx> on dim variables, stored as the
/// lower triangle of the symmetric matrix Q.
class QForm {
 public:
  explicit QForm(int dim);

  static QForm zero(int dim) { return QForm(dim); }
  static QForm identity(int dim);
  static QForm diagonal(const std::vector<Rational>& entries);
  /// Validates squareness and exact symmetry.
  static QForm from_dense(const std::vector<std::vector<Rational>>& rows);

  int dim() const { return dim_; }

  const Rational& entry(int i, int j) const;
  void set_entry(int i, int j, const Rational& value);

  Matrix<Rational> to_matrix() const;
  std::vector<std::vector<Rational>> to_dense() const { return to_matrix(); }

  QForm& operator+=(const QForm& rhs);
  QForm& operator*=(const Rational& c);
  friend QForm operator+(QForm lhs, const QForm& rhs) { return lhs += rhs; }
  friend QForm operator*(QForm lhs, const Rational& c) { return lhs *= c; }
  friend QForm operator*(const Rational& c, QForm rhs) { return rhs *= c; }
  friend bool operator==(const QForm&, const QForm&) = default;

  /// Largest |entry| over the stored triangle; scale measure for epsilon.
  Rational max_abs_entry() const;

 private:
  int dim_;
  std::vector<Rational> lower_;  // row-major lower triangle, dim*(dim+1)/2
};

/// The span data of a system of k quadrics in n+1 variables; X is their
/// common zero locus in projective n-space.
struct QuadricSystem {
  int n = 0;                 // ambient projective dimension
  std::vector<QForm> forms;  // k forms, each of dim n+1

  QuadricSystem(int n_, std::vector<QForm> forms_);
  int k() const { return static_cast<int>(forms.size()); }
};

/// q(x) = x^T Q x, exactly. Throws std::invalid_argument on length mismatch.
Rational eval(const QForm& q, const std::vector<Rational>& x);

/// Ascending coefficients of det(Q - tI); leading coefficient (-1)^dim.
std::vector<Rational> char_poly(const QForm& q);

/// Inertia via Descartes' rule of signs on the characteristic polynomial.
/// All roots of det(Q - tI) are real (Q symmetric), so the variation count
/// is exact, not just an upper bound.
Inertia inertia_descartes(const QForm& q);

/// Inertia via exact symmetric elimination; independent of the Descartes
/// route and must agree with it on every input.
Inertia inertia_ldl(const QForm& q);

/// omega_1 q_1 + ... + omega_k q_k - eps * p, exactly.
QForm combine(const QuadricSystem& sys, const std::vector<Rational>& omega,
              const Rational& eps, const QForm& p);

}  // namespace quadrics
