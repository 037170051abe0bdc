#pragma once

#include <vector>

#include "quadrics/homology.hpp"
#include "quadrics/rational.hpp"

namespace quadrics {

/// Triangulation of real projective n-space (n <= 3) with a rational
/// representative point on the covering sphere attached to every vertex.
/// Cells have spherical diameter below a right angle, so the coherent lift of
/// any edge is the one whose representatives have positive inner product;
/// midpoint subdivision preserves this.
struct CoordComplex {
  int n = 0;
  std::vector<std::vector<Rational>> coords;  // unnormalized, in R^(n+1)
  std::vector<std::vector<int>> cells;        // maximal simplices, dim n

  SimplicialComplex complex() const;
  CoordComplex subdivided() const;
  CoordComplex at_resolution(int subdivisions) const;
};

/// Base meshes: a rational quotient 4-gon for n = 1, the antipodal quotient
/// of the subdivided octahedron for n = 2 (13 vertices), and of the
/// subdivided 16-cell boundary for n = 3 (40 vertices). All coordinates are
/// exact rationals.
CoordComplex projective_mesh(int n);

}  // namespace quadrics
