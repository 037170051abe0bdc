#pragma once

#include <vector>

#include "quadrics/polynomial.hpp"
#include "quadrics/qform.hpp"

namespace quadrics {

// k = 2 analysis. The unit circle of coefficient vectors is parametrized
// rationally by omega(t) = ((1-t^2)/(1+t^2), 2t/(1+t^2)); clearing
// denominators turns det(omega(t) q - eps p) into a polynomial of degree at
// most 2(n+1) whose real roots are exactly the degenerate points of the
// pencil, except possibly the unreached point omega = (-1, 0), which is
// tracked separately through the top coefficient.

struct CirclePolynomial {
  Polynomial poly;             // (1+t^2)^(n+1) det(omega(t) q - eps p)
  Rational value_at_infinity;  // det(-q1 - eps p), the omega = (-1,0) value
  int n = 0;
};

CirclePolynomial circle_polynomial(const QuadricSystem& sys, const Rational& eps,
                                   const QForm& p);

struct RootIsolation {
  int root_count = 0;  // distinct roots on the circle, infinity included
  bool root_at_infinity = false;
  std::vector<RootInterval> intervals;  // finite roots, sorted, separated
};

/// Exact distinct-root count with isolating intervals. Throws NotTransversal
/// if the polynomial is not squarefree (non-generic eps or p; the caller must
/// re-perturb).
RootIsolation sturm_count(const CirclePolynomial& cp);

/// Negative-inertia profile around the circle.
///
/// arc_labels[0] is the arc through omega = (-1, 0); arc_labels[i] for i >= 1
/// is the arc between the i-th and (i+1)-th finite roots. Adjacent labels
/// differ by exactly 1 on a transversal instance.
struct PencilAnalysis {
  int root_count = 0;
  std::vector<int> arc_labels;
  int mu = 0;
  int nu = 0;
  Integer bound;  // n+1 - 2(mu-nu) + root_count/2
  Rational epsilon;
  bool transversal = false;
};

/// Full k = 2 profile at a fixed (eps, p). Throws NotTransversal on a
/// non-squarefree polynomial or a label jump != 1, NotGeneric on a root at
/// the excluded parameter point.
PencilAnalysis index_profile(const QuadricSystem& sys, const Rational& eps,
                             const QForm& p);

/// i^- of (1-t^2) q1 + 2t q2 - eps (1+t^2) p, i.e. of omega(t) q - eps p up
/// to the positive factor (1+t^2).
int negative_index_at(const QuadricSystem& sys, const Rational& eps,
                      const QForm& p, const Rational& t);

/// Union-of-arcs component count for the sublevel set {label <= j} of a
/// circular label sequence, with its boundary-point count. Components must
/// equal half the boundary points for every proper nonempty sublevel.
struct ArcSublevel {
  int components = 0;
  int boundary_points = 0;
};
ArcSublevel arc_sublevel(const std::vector<int>& circular_labels, int j);

}  // namespace quadrics
