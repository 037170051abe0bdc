#include "quadrics/pencil2.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "quadrics/errors.hpp"
#include "quadrics/linalg.hpp"

namespace quadrics {

namespace {

// (1-t^2) Q1 + 2t Q2 - eps (1+t^2) P at a rational parameter value.
Matrix<Rational> pencil_matrix_at(const QuadricSystem& sys, const Rational& eps,
                                  const QForm& p, const Rational& t) {
  const Rational t2 = t * t;
  const Rational a = 1 - t2;
  const Rational b = 2 * t;
  const Rational c = -eps * (1 + t2);
  const int dim = sys.n + 1;
  Matrix<Rational> m(dim, std::vector<Rational>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m[i][j] = a * sys.forms[0].entry(i, j) + b * sys.forms[1].entry(i, j) +
                c * p.entry(i, j);
  return m;
}

}  // namespace

CirclePolynomial circle_polynomial(const QuadricSystem& sys, const Rational& eps,
                                   const QForm& p) {
  if (sys.k() != 2) throw std::invalid_argument("circle_polynomial: k must be 2");
  if (p.dim() != sys.n + 1)
    throw std::invalid_argument("circle_polynomial: p dim != n+1");
  const int dim = sys.n + 1;
  const int degree = 2 * dim;
  // The determinant is a polynomial of degree <= 2(n+1) in t; interpolate it
  // from exact evaluations at integer nodes.
  std::vector<Rational> values;
  values.reserve(degree + 1);
  for (int node = 0; node <= degree; ++node)
    values.push_back(determinant(pencil_matrix_at(sys, eps, p, Rational(node))));
  std::vector<Rational> coeffs = interpolate_at_integer_nodes(values);

  CirclePolynomial cp;
  cp.n = sys.n;
  cp.poly = Polynomial(std::move(coeffs));
  // Independent route to the same number: the top coefficient equals the
  // determinant at the unreached point omega = (-1, 0).
  QForm at_infinity = sys.forms[0] * Rational(-1) + p * (-eps);
  cp.value_at_infinity = determinant(at_infinity.to_matrix());
  const Rational top = cp.poly.degree() == degree
                           ? cp.poly.coeffs().back()
                           : Rational(0);
  if (top != cp.value_at_infinity)
    throw std::logic_error("circle_polynomial: inconsistent value at infinity");
  return cp;
}

RootIsolation sturm_count(const CirclePolynomial& cp) {
  RootIsolation iso;
  iso.root_at_infinity = sgn(cp.value_at_infinity) == 0;
  if (cp.poly.is_zero()) {
    throw NotTransversal("circle polynomial vanishes identically");
  }
  // Multiple complex factors (powers of 1 + t^2 from the parametrization) are
  // harmless; only a repeated real root breaks transversality.
  if (cp.poly.has_repeated_real_root())
    throw NotTransversal("circle polynomial has a multiple root");
  iso.intervals = isolate_real_roots(cp.poly);
  iso.root_count =
      static_cast<int>(iso.intervals.size()) + (iso.root_at_infinity ? 1 : 0);
  return iso;
}

int negative_index_at(const QuadricSystem& sys, const Rational& eps,
                      const QForm& p, const Rational& t) {
  const Inertia inertia =
      inertia_from_char_poly(char_poly_coeffs(pencil_matrix_at(sys, eps, p, t)));
  if (inertia.ker != 0)
    throw std::logic_error("negative_index_at: sample point lies on the curve");
  return inertia.neg;
}

PencilAnalysis index_profile(const QuadricSystem& sys, const Rational& eps,
                             const QForm& p) {
  const CirclePolynomial cp = circle_polynomial(sys, eps, p);
  const RootIsolation iso = sturm_count(cp);
  if (iso.root_at_infinity)
    throw NotGeneric("degenerate point at the excluded parameter omega=(-1,0)");

  PencilAnalysis out;
  out.epsilon = eps;
  out.root_count = iso.root_count;

  const auto& roots = iso.intervals;
  const int m = static_cast<int>(roots.size());
  std::vector<Rational> samples;  // samples[0] belongs to the wrap arc
  if (m == 0) {
    samples.push_back(Rational(0));
  } else {
    const Rational beyond = roots.back().hi + 1;
    samples.push_back(beyond);
    for (int i = 0; i + 1 < m; ++i)
      samples.push_back((roots[static_cast<std::size_t>(i)].hi +
                         roots[static_cast<std::size_t>(i) + 1].lo) /
                        2);
    // The wrap arc is one arc through infinity; its label must match on both
    // sides of the root range.
    const Rational before = roots.front().lo - 1;
    if (negative_index_at(sys, eps, p, before) !=
        negative_index_at(sys, eps, p, beyond))
      throw NotTransversal("wrap arc label mismatch across infinity");
  }

  out.arc_labels.reserve(samples.size());
  for (const auto& t : samples)
    out.arc_labels.push_back(negative_index_at(sys, eps, p, t));

  out.mu = out.arc_labels[0];
  out.nu = out.arc_labels[0];
  const int arcs = static_cast<int>(out.arc_labels.size());
  for (int i = 0; i < arcs; ++i) {
    out.mu = std::max(out.mu, out.arc_labels[static_cast<std::size_t>(i)]);
    out.nu = std::min(out.nu, out.arc_labels[static_cast<std::size_t>(i)]);
    if (arcs > 1) {
      const int next = out.arc_labels[static_cast<std::size_t>((i + 1) % arcs)];
      if (std::abs(out.arc_labels[static_cast<std::size_t>(i)] - next) != 1)
        throw NotTransversal("adjacent arc labels differ by " +
                             std::to_string(std::abs(
                                 out.arc_labels[static_cast<std::size_t>(i)] -
                                 next)));
    }
  }
  if (out.root_count % 2 != 0)
    throw std::logic_error("index_profile: odd root count on a circle");

  out.bound = Integer(sys.n + 1 - 2 * (out.mu - out.nu) + out.root_count / 2);
  out.transversal = true;
  return out;
}

ArcSublevel arc_sublevel(const std::vector<int>& circular_labels, int j) {
  ArcSublevel r;
  const int m = static_cast<int>(circular_labels.size());
  for (int i = 0; i < m; ++i) {
    const bool in = circular_labels[static_cast<std::size_t>(i)] <= j;
    const bool prev_in =
        circular_labels[static_cast<std::size_t>((i + m - 1) % m)] <= j;
    if (in && !prev_in) ++r.components;
    if (in != prev_in) ++r.boundary_points;
  }
  // A full circle (everything in) has no boundary and one component.
  if (r.components == 0 && !circular_labels.empty() && circular_labels[0] <= j)
    r.components = 1;
  return r;
}

}  // namespace quadrics
