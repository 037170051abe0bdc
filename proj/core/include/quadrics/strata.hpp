#pragma once

#include <vector>

#include "quadrics/rational.hpp"

namespace quadrics {

// Combinatorics and closed-form topology of the corank strata Z^(r) of the
// space of symmetric matrices: the set of forms with dim ker >= r has
// codimension r(r+1)/2, its singular locus is the next stratum (corank r+1),
// and it decomposes as a union of intersections of consecutive boundary
// pieces A_j.

/// Descriptor of the corank-r stratum.
struct StratumDescriptor {
  int r = 0;
  int codim = 0;
  /// Smallest k for which the stratum can meet a generic (k-1)-sphere of
  /// forms; for k <= codim the intersection is certified empty. Depends on r
  /// only.
  int smallest_nonempty_k = 0;
};

/// All subsets of {0, ..., l-1} made of r consecutive integers, in increasing
/// order of first element.
struct IntervalFamily {
  int r = 0;
  int l = 0;
  std::vector<std::vector<int>> intervals;
};

/// r(r+1)/2.
int codim(int r);

StratumDescriptor stratum_descriptor(int r);

/// Largest corank r with r(r+1)/2 < k, found by integer search (no floating
/// point, so perfect-square discriminants cannot round the wrong way).
/// Strata with r > sigma_k(k) are empty on a k-dimensional span.
int sigma_k(int k);

/// binom(n, j); total Z/2 Betti number of the real Grassmannian Gr(j, n).
Integer grassmannian_betti(int j, int n);

/// Total Betti number of the projectivized discriminant: sum of the
/// Grassmannian numbers, cross-checked against 2^n.
Integer discriminant_betti(int n);

/// Degree of the complexified corank-r stratum,
/// prod_{a=0}^{r-1} binom(n+a, r-a) / binom(2a+1, a). Evaluated in exact
/// rationals; a non-integer result throws (formula misuse).
Integer harris_tu_degree(int r, int n);

IntervalFamily stratum_decomposition(int r, int l);

}  // namespace quadrics
