#include "quadrics/qform.hpp"

#include <stdexcept>
#include <utility>

namespace quadrics {

namespace {
std::size_t tri_index(int i, int j) {
  // requires i >= j
  return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}
}  // namespace

QForm::QForm(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("QForm: dim must be positive");
  lower_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, Rational(0));
}

QForm QForm::identity(int dim) {
  QForm q(dim);
  for (int i = 0; i < dim; ++i) q.set_entry(i, i, 1);
  return q;
}

QForm QForm::diagonal(const std::vector<Rational>& entries) {
  QForm q(static_cast<int>(entries.size()));
  for (int i = 0; i < q.dim(); ++i) q.set_entry(i, i, entries[i]);
  return q;
}

QForm QForm::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const int dim = static_cast<int>(rows.size());
  QForm q(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      throw std::invalid_argument("QForm: matrix is not square");
    for (int j = 0; j <= i; ++j) {
      if (rows[i][j] != rows[j][i])
        throw std::invalid_argument("QForm: matrix is not symmetric");
      q.set_entry(i, j, rows[i][j]);
    }
  }
  return q;
}

const Rational& QForm::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::invalid_argument("QForm: index out of range");
  return i >= j ? lower_[tri_index(i, j)] : lower_[tri_index(j, i)];
}

void QForm::set_entry(int i, int j, const Rational& value) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::invalid_argument("QForm: index out of range");
  lower_[i >= j ? tri_index(i, j) : tri_index(j, i)] = value;
}

Matrix<Rational> QForm::to_matrix() const {
  Matrix<Rational> m(dim_, std::vector<Rational>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m[i][j] = entry(i, j);
  return m;
}

QForm& QForm::operator+=(const QForm& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("QForm: dim mismatch");
  for (std::size_t i = 0; i < lower_.size(); ++i) lower_[i] += rhs.lower_[i];
  return *this;
}

QForm& QForm::operator*=(const Rational& c) {
  for (auto& e : lower_) e *= c;
  return *this;
}

Rational QForm::max_abs_entry() const {
  Rational best(0);
  for (const auto& e : lower_) {
    Rational a = abs(e);
    if (a > best) best = a;
  }
  return best;
}

QuadricSystem::QuadricSystem(int n_, std::vector<QForm> forms_)
    : n(n_), forms(std::move(forms_)) {
  if (n < 0) throw std::invalid_argument("QuadricSystem: n must be >= 0");
  if (forms.empty()) throw std::invalid_argument("QuadricSystem: k must be >= 1");
  for (const auto& f : forms)
    if (f.dim() != n + 1)
      throw std::invalid_argument("QuadricSystem: form dim != n+1");
}

Rational eval(const QForm& q, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != q.dim())
    throw std::invalid_argument("eval: vector length != form dim");
  Rational acc(0);
  for (int i = 0; i < q.dim(); ++i) {
    acc += q.entry(i, i) * x[i] * x[i];
    for (int j = 0; j < i; ++j) acc += 2 * q.entry(i, j) * x[i] * x[j];
  }
  return acc;
}

std::vector<Rational> char_poly(const QForm& q) {
  return char_poly_coeffs(q.to_matrix());
}

Inertia inertia_descartes(const QForm& q) {
  return inertia_from_char_poly(char_poly(q));
}

Inertia inertia_ldl(const QForm& q) {
  return inertia_by_elimination(q.to_matrix());
}

QForm combine(const QuadricSystem& sys, const std::vector<Rational>& omega,
              const Rational& eps, const QForm& p) {
  if (static_cast<int>(omega.size()) != sys.k())
    throw std::invalid_argument("combine: omega length != k");
  if (p.dim() != sys.n + 1)
    throw std::invalid_argument("combine: p dim != n+1");
  QForm acc(sys.n + 1);
  for (int i = 0; i < sys.k(); ++i) acc += sys.forms[i] * omega[i];
  acc += p * (-eps);
  return acc;
}

}  // namespace quadrics
