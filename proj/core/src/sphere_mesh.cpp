#include "quadrics/sphere_mesh.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrics {

SphereMesh SphereMesh::octahedron() {
  SphereMesh mesh;
  mesh.level = 0;
  mesh.vertices = {{Rational(1), Rational(0), Rational(0)},
                   {Rational(-1), Rational(0), Rational(0)},
                   {Rational(0), Rational(1), Rational(0)},
                   {Rational(0), Rational(-1), Rational(0)},
                   {Rational(0), Rational(0), Rational(1)},
                   {Rational(0), Rational(0), Rational(-1)}};
  mesh.triangles = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                    {0, 2, 5}, {2, 1, 5}, {1, 3, 5}, {3, 0, 5}};
  return mesh;
}

SphereMesh SphereMesh::refined() const {
  SphereMesh out;
  out.level = level + 1;
  out.vertices = vertices;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    std::array<Rational, 3> m;
    for (int c = 0; c < 3; ++c)
      m[static_cast<std::size_t>(c)] =
          (vertices[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] +
           vertices[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) /
          2;
    out.vertices.push_back(m);
    const int id = static_cast<int>(out.vertices.size()) - 1;
    midpoint.emplace(key, id);
    return id;
  };
  for (const auto& t : triangles) {
    const int ab = mid(t[0], t[1]);
    const int bc = mid(t[1], t[2]);
    const int ca = mid(t[2], t[0]);
    out.triangles.push_back({t[0], ab, ca});
    out.triangles.push_back({t[1], bc, ab});
    out.triangles.push_back({t[2], ca, bc});
    out.triangles.push_back({ab, bc, ca});
  }
  return out;
}

SphereMesh SphereMesh::at_level(int level) {
  if (level < 0) throw std::invalid_argument("SphereMesh: negative level");
  SphereMesh mesh = octahedron();
  for (int i = 0; i < level; ++i) mesh = mesh.refined();
  return mesh;
}

std::map<std::pair<int, int>, std::vector<int>> SphereMesh::edge_triangles() const {
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    for (int e = 0; e < 3; ++e) {
      const auto key = std::minmax(tri[static_cast<std::size_t>(e)],
                                   tri[static_cast<std::size_t>((e + 1) % 3)]);
      edges[key].push_back(static_cast<int>(t));
    }
  }
  return edges;
}

Rational SphereMesh::norm2(int vertex) const {
  const auto& v = vertices[static_cast<std::size_t>(vertex)];
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

void SphereMesh::nudge_vertex(int vertex, int attempt) {
  // Shift by 2^-(18+3*attempt) along a coordinate axis cycling with the
  // attempt number; small enough to keep the star embedded at any level
  // reachable in practice.
  Rational delta(1);
  for (int i = 0; i < 18 + 3 * attempt + 2 * level; ++i) delta /= 2;
  auto& v = vertices[static_cast<std::size_t>(vertex)];
  v[static_cast<std::size_t>(attempt % 3)] += delta;
}

}  // namespace quadrics
