#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadrics/rational.hpp"

namespace quadrics {

/// Abstract simplicial complex given by its maximal simplices; the downward
/// closure is generated on demand.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> maximal_simplices;

  static SimplicialComplex from_maximal(std::vector<std::vector<int>> simplices);
};

struct BettiVector {
  std::vector<long> b;
  long total = 0;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Z/2 Betti numbers: boundary matrices over GF(2), ranks by elimination,
/// dimensions by rank-nullity.
BettiVector betti_z2(const SimplicialComplex& complex);

/// Euler characteristic straight from simplex counts (alternating sum);
/// independent cross-check of the elimination.
long euler_characteristic(const SimplicialComplex& complex);

/// Curated small triangulations: "circle", "sphere2" (octahedron), "torus7"
/// (the 7-vertex torus), "rp2_6" (the 6-vertex projective plane, built as the
/// antipodal quotient of the icosahedron), "rp3_11" (projective 3-space,
/// built as the antipodal quotient of the subdivided 16-cell boundary), and
/// "disk". Throws std::invalid_argument for unknown names.
SimplicialComplex curated_complex(std::string_view name);

/// b(M) = b(boundary)/2 for a manifold-with-boundary complex embedded in a
/// sphere triangulation; both totals computed by the GF(2) pipeline.
bool verify_half_boundary(const SimplicialComplex& m,
                          const SimplicialComplex& boundary);

/// Plain-text exchange format: one maximal simplex per line, whitespace
/// separated vertex indices.
SimplicialComplex parse_complex_text(const std::string& text);
std::string to_text(const SimplicialComplex& complex);

}  // namespace quadrics
