#include "quadrics/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quadrics {

SimplicialComplex SimplicialComplex::from_maximal(
    std::vector<std::vector<int>> simplices) {
  SimplicialComplex c;
  int max_vertex = -1;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (s.front() < 0) throw std::invalid_argument("negative vertex index");
    max_vertex = std::max(max_vertex, s.back());
  }
  c.vertex_count = max_vertex + 1;
  c.maximal_simplices = std::move(simplices);
  return c;
}

namespace {

// Faces grouped by dimension, each sorted list mapped to a dense index.
struct FaceTable {
  std::vector<std::map<std::vector<int>, int>> by_dim;
};

FaceTable enumerate_faces(const SimplicialComplex& complex) {
  FaceTable table;
  for (const auto& top : complex.maximal_simplices) {
    const std::size_t n = top.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(top[i]);
      const std::size_t dim = face.size() - 1;
      if (table.by_dim.size() <= dim) table.by_dim.resize(dim + 1);
      auto& level = table.by_dim[dim];
      if (!level.count(face))
        level.emplace(std::move(face), static_cast<int>(level.size()));
    }
  }
  return table;
}

// GF(2) rank of the boundary map from dimension d to d-1.
long boundary_rank(const FaceTable& table, std::size_t d) {
  if (d == 0 || d >= table.by_dim.size()) return 0;
  const auto& rows = table.by_dim[d - 1];
  const std::size_t words = (rows.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots;  // echelon columns
  std::vector<std::size_t> pivot_bit;
  long rank = 0;
  for (const auto& [face, idx] : table.by_dim[d]) {
    std::vector<std::uint64_t> column(words, 0);
    std::vector<int> sub(face.size() - 1);
    for (std::size_t omit = 0; omit < face.size(); ++omit) {
      sub.clear();
      for (std::size_t i = 0; i < face.size(); ++i)
        if (i != omit) sub.push_back(face[i]);
      const int row = rows.at(sub);
      column[static_cast<std::size_t>(row) / 64] ^=
          (std::uint64_t{1} << (static_cast<std::size_t>(row) % 64));
    }
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      const std::size_t bit = pivot_bit[p];
      if (column[bit / 64] & (std::uint64_t{1} << (bit % 64)))
        for (std::size_t w = 0; w < words; ++w) column[w] ^= pivots[p][w];
    }
    std::size_t lead = rows.size();
    for (std::size_t w = 0; w < words && lead == rows.size(); ++w)
      if (column[w]) {
        for (std::size_t b = 0; b < 64; ++b)
          if (column[w] & (std::uint64_t{1} << b)) {
            lead = w * 64 + b;
            break;
          }
      }
    if (lead != rows.size()) {
      pivots.push_back(std::move(column));
      pivot_bit.push_back(lead);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

BettiVector betti_z2(const SimplicialComplex& complex) {
  BettiVector result;
  if (complex.maximal_simplices.empty()) return result;
  const FaceTable table = enumerate_faces(complex);
  const std::size_t dims = table.by_dim.size();
  std::vector<long> ranks(dims + 1, 0);
  for (std::size_t d = 1; d < dims; ++d)
    ranks[d] = boundary_rank(table, d);
  result.b.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const long faces = static_cast<long>(table.by_dim[d].size());
    result.b[d] = faces - ranks[d] - ranks[d + 1];
    result.total += result.b[d];
  }
  // Trailing zero dimensions carry no information and would make complexes
  // of different top dimension compare unequal.
  while (!result.b.empty() && result.b.back() == 0) result.b.pop_back();
  return result;
}

long euler_characteristic(const SimplicialComplex& complex) {
  if (complex.maximal_simplices.empty()) return 0;
  const FaceTable table = enumerate_faces(complex);
  long chi = 0;
  for (std::size_t d = 0; d < table.by_dim.size(); ++d) {
    const long faces = static_cast<long>(table.by_dim[d].size());
    chi += (d % 2 == 0) ? faces : -faces;
  }
  return chi;
}

namespace {

SimplicialComplex torus_seven() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_maximal(std::move(faces));
}

// Antipodal quotient of the icosahedron: the minimal 6-vertex projective
// plane. Vertex 0 is the pole class, 1..5 the pentagon classes.
SimplicialComplex projective_plane_six() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, 1 + i, 1 + (i + 1) % 5});
    faces.push_back({1 + i, 1 + (i + 1) % 5, 1 + (i + 3) % 5});
  }
  return SimplicialComplex::from_maximal(std::move(faces));
}

// Projective 3-space as the antipodal quotient of the barycentric
// subdivision of the 16-cell boundary. The subdivision makes the quotient
// simplicial: no chain of faces meets its own antipode, and a chain equals a
// signed copy of another only through the antipodal map itself.
SimplicialComplex projective_three_space() {
  // Faces of the cross-polytope: a sign per chosen axis, encoded as
  // (axis mask, sign mask with bits inside the axis mask).
  struct Face {
    unsigned axes = 0;
    unsigned signs = 0;
    auto operator<=>(const Face&) const = default;
  };
  std::vector<Face> faces;
  for (unsigned axes = 1; axes < 16; ++axes) {
    // enumerate sign masks supported on axes
    unsigned sub = axes;
    for (;;) {
      faces.push_back({axes, sub});
      if (sub == 0) break;
      sub = (sub - 1) & axes;
    }
  }
  auto antipode = [](const Face& f) { return Face{f.axes, f.axes & ~f.signs}; };
  int classes = 0;
  std::map<Face, int> id_of;
  for (const auto& f : faces) {
    if (id_of.count(f)) continue;
    id_of[f] = classes;
    id_of[antipode(f)] = classes;
    ++classes;
  }

  // Chains f0 < f1 < f2 < f3 by strict face inclusion with dims 0..3.
  std::vector<std::vector<int>> tets;
  auto popcount = [](unsigned x) { return __builtin_popcount(x); };
  auto contains = [&](const Face& small, const Face& big) {
    return (small.axes & big.axes) == small.axes &&
           (big.signs & small.axes) == small.signs;
  };
  std::vector<Face> by_dim[4];
  for (const auto& f : faces) by_dim[popcount(f.axes) - 1].push_back(f);
  for (const auto& f0 : by_dim[0])
    for (const auto& f1 : by_dim[1]) {
      if (!contains(f0, f1)) continue;
      for (const auto& f2 : by_dim[2]) {
        if (!contains(f1, f2)) continue;
        for (const auto& f3 : by_dim[3]) {
          if (!contains(f2, f3)) continue;
          tets.push_back({id_of[f0], id_of[f1], id_of[f2], id_of[f3]});
        }
      }
    }
  // Each quotient tetrahedron appears once per orbit member; dedupe.
  for (auto& t : tets) std::sort(t.begin(), t.end());
  std::sort(tets.begin(), tets.end());
  tets.erase(std::unique(tets.begin(), tets.end()), tets.end());
  return SimplicialComplex::from_maximal(std::move(tets));
}

}  // namespace

SimplicialComplex curated_complex(std::string_view name) {
  if (name == "circle")
    return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {2, 0}});
  if (name == "sphere2")
    return SimplicialComplex::from_maximal({{0, 2, 4}, {2, 1, 4}, {1, 3, 4},
                                            {3, 0, 4}, {0, 2, 5}, {2, 1, 5},
                                            {1, 3, 5}, {3, 0, 5}});
  if (name == "torus7") return torus_seven();
  if (name == "rp2_6") return projective_plane_six();
  if (name == "rp3_11") return projective_three_space();
  if (name == "disk") return SimplicialComplex::from_maximal({{0, 1, 2}});
  throw std::invalid_argument("unknown curated complex: " + std::string(name));
}

bool verify_half_boundary(const SimplicialComplex& m,
                          const SimplicialComplex& boundary) {
  const BettiVector bm = betti_z2(m);
  const BettiVector bb = betti_z2(boundary);
  return 2 * bm.total == bb.total;
}

SimplicialComplex parse_complex_text(const std::string& text) {
  std::vector<std::vector<int>> simplices;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> simplex;
    int v;
    while (ls >> v) simplex.push_back(v);
    if (!ls.eof())
      throw std::invalid_argument("complex text: non-integer token in line: " + line);
    if (!simplex.empty()) simplices.push_back(std::move(simplex));
  }
  if (simplices.empty())
    throw std::invalid_argument("complex text: no simplices");
  return SimplicialComplex::from_maximal(std::move(simplices));
}

std::string to_text(const SimplicialComplex& complex) {
  std::ostringstream out;
  for (const auto& s : complex.maximal_simplices) {
    for (std::size_t i = 0; i < s.size(); ++i)
      out << (i ? " " : "") << s[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace quadrics
