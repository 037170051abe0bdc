#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadrics/rational.hpp"

namespace quadrics {

// Closed-form upper bounds for the total Z/2 Betti number of an intersection
// of k quadrics in projective n-space, plus the generic bounds they are
// assembled from. Everything is evaluated in exact arithmetic; bounds that
// come out non-integer are reported as exact rational plus ceiling (the
// ceiling is still a valid bound).

struct BoundValue {
  Rational exact;
  Integer ceiling;
};

BoundValue make_bound(const Rational& exact);

/// n * d * (2d-1)^(n-1) for an algebraic set of degree <= d in projective
/// n-space.
Integer milnor_projective(int n, int d);

/// (n/2) * sum_j binom(k,j) binom(n+1,j) 2^j, the quadratic semialgebraic
/// bound; grows like n^(k+1).
BoundValue basu_s(int k, int n);

/// delta * (2 delta - 1)^(k-1) with delta = max(d, n-r+1): the corank-r locus
/// of a degree-d family cut to a k-dimensional space of parameters.
Integer det_variety_bound(int d, int n, int r, int k);

/// Euler characteristic of a smooth complete intersection of multidegree
/// (2, delta) in complex projective k-space. Computed two independent ways --
/// series expansion of 2 delta (1+x)^(k+1) / ((1+2x)(1+delta x)) and the
/// closed double sum -- and cross-asserted.
Integer hirzebruch_chi(int k, int delta);

/// Total Betti number (k-1)(1+(-1)^(k+1)) + (-1)^k chi of that complete
/// intersection. Throws if the result comes out negative (bad regime).
Integer ci_betti(int k, int delta);

/// 2 delta^(k-1) + (1/4) binom(k+1,3) (3 delta)^(k-2), dominating ci_betti.
BoundValue ci_betti_bound(int k, int delta);

/// (2d)^(k-1) + (1/8) binom(k+1,3) (6d)^(k-2) for a degree-d algebraic subset
/// of the (k-1)-sphere. Terms with negative exponent (k = 1) are dropped:
/// the originating Mayer-Vietoris term is void there.
BoundValue spherical_bound(int k, int d);

/// (n+1) + (1/2) sum_{r=1}^{sigma_k} spherical_bound(k, n-r+2): the fully
/// numerical bound, O(n)^(k-1).
BoundValue numerical_bound(int k, int n);

struct TopologicalBound {
  Integer bound;
  bool rounded_up = false;  // set when the stratum Betti sum was odd
};

/// n+1 - 2(mu - nu) + (1/2) sum of stratum Betti numbers, from measured data.
TopologicalBound topological_bound_from_data(int n, int mu, int nu,
                                             const std::vector<int>& stratum_bettis);

/// Symbolic rendering of the n^(O(k)) bound; the constant is caller-supplied
/// because no specific value is pinned down.
std::string barvinok_bound(int k, int constant);

struct ReferenceConstants {
  /// Leading coefficients c_k of the maximal complete-intersection
  /// complexity c_k n^(k-1), for k = 2..6.
  std::vector<std::pair<int, Rational>> ck;
  /// B(2,n) = 2n.
  Integer max_complexity_two_quadrics(int n) const { return Integer(2) * n; }
  /// Refined k=3 bound n^2 + n.
  Integer refined_three_quadrics(int n) const { return Integer(n) * n + n; }
  /// The k=4 headline constant, reported verbatim.
  std::string four_quadrics_reported = "16n^3 + O(n)";
  /// Smooth-case component-count window for three quadrics, reported
  /// verbatim (report-only, not evaluated).
  std::string b0_three_quadrics_lower = "(1/4)(n-1)(n+5) - 2 < B0(3,n)";
  std::string b0_three_quadrics_upper =
      "B0(3,n) <= (3/2) l (l-1) + 2,  l = floor(n/2) + 1";
};

/// The fixed constants quoted alongside the computed bounds; report-only.
ReferenceConstants reference_constants();

}  // namespace quadrics
