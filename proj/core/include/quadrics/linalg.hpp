#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "quadrics/quad_ext.hpp"
#include "quadrics/rational.hpp"

namespace quadrics {

// Dense square matrices over an exact field F (Rational or QuadExt). Sizes
// here are tiny (forms in at most ~10 variables), so plain Gaussian
// elimination with exact division is the right tool.

template <typename F>
using Matrix = std::vector<std::vector<F>>;

struct Inertia {
  int pos = 0;  // positive eigenvalues
  int neg = 0;  // negative eigenvalues
  int ker = 0;  // kernel dimension
  int dim() const { return pos + neg + ker; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <typename F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  F det(1);
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      negate = !negate;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      F factor = m[r][col] / m[col][col];
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= factor * m[col][c];
      m[r][col] = F(0);
    }
  }
  return negate ? -det : det;
}

/// Coefficients (ascending) of the polynomial with values[i] at node points
/// 0, 1, ..., values.size()-1. Newton divided differences; exact over F.
template <typename F>
std::vector<F> interpolate_at_integer_nodes(const std::vector<F>& values) {
  const std::size_t m = values.size();
  std::vector<F> diffs = values;  // diffs[i] becomes f[x0..xi]
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      diffs[i] = (diffs[i] - diffs[i - 1]) / F(static_cast<int>(level));
  // Horner expansion of the Newton form over nodes 0..m-1.
  std::vector<F> coeffs(m, F(0));
  for (std::size_t i = m; i-- > 0;) {
    // coeffs <- coeffs * (x - i) + diffs[i]
    for (std::size_t c = m - 1; c >= 1; --c)
      coeffs[c] = coeffs[c - 1] - F(static_cast<int>(i)) * coeffs[c];
    coeffs[0] = diffs[i] - F(static_cast<int>(i)) * coeffs[0];
  }
  return coeffs;
}

/// det(M - t*I) as ascending coefficients (a_0, ..., a_dim), computed by
/// evaluating the determinant at dim+1 integer nodes and interpolating.
template <typename F>
std::vector<F> char_poly_coeffs(const Matrix<F>& m) {
  const std::size_t n = m.size();
  std::vector<F> values;
  values.reserve(n + 1);
  for (std::size_t node = 0; node <= n; ++node) {
    Matrix<F> shifted = m;
    for (std::size_t i = 0; i < n; ++i)
      shifted[i][i] -= F(static_cast<int>(node));
    values.push_back(determinant(shifted));
  }
  return interpolate_at_integer_nodes(values);
}

/// Inertia from characteristic-polynomial coefficients by Descartes' rule.
/// Exact here: a real symmetric matrix has all-real spectrum, so the count of
/// sign variations equals the number of positive roots, with no slack. The
/// kernel dimension is the number of leading (low-order) zero coefficients.
template <typename F>
Inertia inertia_from_char_poly(const std::vector<F>& coeffs) {
  const int dim = static_cast<int>(coeffs.size()) - 1;
  int ker = 0;
  while (ker <= dim && is_zero(coeffs[ker])) ++ker;
  if (ker > dim) throw std::logic_error("char poly is identically zero");
  int variations = 0;
  int prev = 0;
  for (int i = ker; i <= dim; ++i) {
    const int s = sign_of(coeffs[i]);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  Inertia inertia;
  inertia.ker = ker;
  inertia.pos = variations;
  inertia.neg = dim - variations - ker;
  return inertia;
}

/// Inertia by symmetric Gaussian elimination with symmetric pivoting.
/// Diagonal pivots are preferred; when the whole remaining diagonal vanishes,
/// a nonzero off-diagonal entry yields a hyperbolic 2x2 block contributing
/// one positive and one negative eigenvalue. Exact over F, so this is an
/// independent oracle for the Descartes route.
template <typename F>
Inertia inertia_by_elimination(Matrix<F> m) {
  const std::size_t n = m.size();
  Inertia inertia;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < n; ++i) live.push_back(i);

  auto eliminate_rank1 = [&](std::size_t p) {
    // Schur complement of the 1x1 block at live index p.
    const std::size_t ip = live[p];
    F d = m[ip][ip];
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (a == p) continue;
      const std::size_t ia = live[a];
      if (is_zero(m[ia][ip])) continue;
      F f = m[ia][ip] / d;
      for (std::size_t b = 0; b < live.size(); ++b) {
        if (b == p) continue;
        const std::size_t ib = live[b];
        m[ia][ib] -= f * m[ip][ib];
      }
    }
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(p));
  };

  while (!live.empty()) {
    std::size_t diag = live.size();
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (!is_zero(m[live[a]][live[a]])) {
        diag = a;
        break;
      }
    }
    if (diag < live.size()) {
      const int s = sign_of(m[live[diag]][live[diag]]);
      (s > 0 ? inertia.pos : inertia.neg) += 1;
      eliminate_rank1(diag);
      continue;
    }
    // Whole remaining diagonal is zero: either the block is zero, or we pivot
    // on a 2x2 hyperbolic block [[0, a], [a, 0]].
    std::size_t pa = live.size(), pb = live.size();
    for (std::size_t a = 0; a < live.size() && pa == live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (!is_zero(m[live[a]][live[b]])) {
          pa = a;
          pb = b;
          break;
        }
    if (pa == live.size()) {
      inertia.ker += static_cast<int>(live.size());
      break;
    }
    const std::size_t ia = live[pa], ib = live[pb];
    F off = m[ia][ib];
    // Schur complement of [[0, off], [off, 0]]: S = A - U B^{-1} U^T with
    // B^{-1} = [[0, 1/off], [1/off, 0]].
    for (std::size_t r = 0; r < live.size(); ++r) {
      if (r == pa || r == pb) continue;
      const std::size_t ir = live[r];
      F ua = m[ir][ia] / off;  // couples with column ib
      F ub = m[ir][ib] / off;  // couples with column ia
      for (std::size_t c = 0; c < live.size(); ++c) {
        if (c == pa || c == pb) continue;
        const std::size_t ic = live[c];
        m[ir][ic] -= ua * m[ib][ic] + ub * m[ia][ic];
      }
    }
    inertia.pos += 1;
    inertia.neg += 1;
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pb));
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pa));
  }
  return inertia;
}

}  // namespace quadrics
