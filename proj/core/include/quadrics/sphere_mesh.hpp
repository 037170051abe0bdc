#pragma once

#include <array>
#include <map>
#include <vector>

#include "quadrics/rational.hpp"

namespace quadrics {

/// Triangulation of the 2-sphere by radial projection of a subdivided
/// octahedron. Vertices keep their rational pre-normalization coordinates;
/// consumers only ever need signs of evaluations at v/|v|, never the
/// normalized point itself, so nothing irrational is stored.
struct SphereMesh {
  int level = 0;
  std::vector<std::array<Rational, 3>> vertices;
  std::vector<std::array<int, 3>> triangles;

  static SphereMesh octahedron();
  /// One midpoint refinement (each triangle splits into four).
  SphereMesh refined() const;
  static SphereMesh at_level(int level);

  /// Sorted-endpoint edge keys to incident triangle ids; every edge of a
  /// closed mesh borders exactly two triangles.
  std::map<std::pair<int, int>, std::vector<int>> edge_triangles() const;

  /// |v|^2 of a vertex.
  Rational norm2(int vertex) const;

  /// Displaces one vertex slightly off a degenerate position. The
  /// perturbation is small relative to the mesh scale, so the radial
  /// projection stays a triangulation.
  void nudge_vertex(int vertex, int attempt);
};

}  // namespace quadrics
