#include "quadrics/projective_mesh.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quadrics {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Antipodal quotient of the barycentrically subdivided boundary of the
// d-dimensional cross-polytope, with rational barycenter representatives.
// The subdivision makes the quotient simplicial (no flag chain meets its own
// antipode, and equal class sets only arise from the antipodal pairing).
CoordComplex cross_polytope_quotient(int d) {
  struct Face {
    unsigned axes = 0;
    unsigned signs = 0;
    auto operator<=>(const Face&) const = default;
  };
  const unsigned all = (1u << d) - 1;
  std::vector<Face> faces;
  for (unsigned axes = 1; axes <= all; ++axes) {
    unsigned sub = axes;
    for (;;) {
      faces.push_back({axes, sub});
      if (sub == 0) break;
      sub = (sub - 1) & axes;
    }
  }
  auto antipode = [](const Face& f) { return Face{f.axes, f.axes & ~f.signs}; };

  CoordComplex out;
  out.n = d - 1;
  std::map<Face, int> id_of;
  for (const auto& f : faces) {
    if (id_of.count(f)) continue;
    const int id = static_cast<int>(out.coords.size());
    id_of[f] = id;
    id_of[antipode(f)] = id;
    // Barycenter of the representative member.
    std::vector<Rational> c(static_cast<std::size_t>(d), Rational(0));
    const int weight = __builtin_popcount(f.axes);
    for (int axis = 0; axis < d; ++axis)
      if (f.axes & (1u << axis))
        c[static_cast<std::size_t>(axis)] =
            Rational((f.signs >> axis) & 1 ? 1 : -1, weight);
    out.coords.push_back(std::move(c));
  }

  auto contains = [](const Face& small, const Face& big) {
    return (small.axes & big.axes) == small.axes &&
           (big.signs & small.axes) == small.signs;
  };
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(d));
  for (const auto& f : faces)
    by_dim[static_cast<std::size_t>(__builtin_popcount(f.axes) - 1)].push_back(f);

  std::vector<std::vector<int>> cells;
  std::vector<Face> chain;
  auto extend = [&](auto&& self, std::size_t level) -> void {
    if (level == static_cast<std::size_t>(d)) {
      std::vector<int> cell;
      for (const auto& f : chain) cell.push_back(id_of[f]);
      std::sort(cell.begin(), cell.end());
      cells.push_back(std::move(cell));
      return;
    }
    for (const auto& f : by_dim[level]) {
      if (!chain.empty() && !contains(chain.back(), f)) continue;
      chain.push_back(f);
      self(self, level + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  out.cells = std::move(cells);
  return out;
}

}  // namespace

SimplicialComplex CoordComplex::complex() const {
  return SimplicialComplex::from_maximal(cells);
}

CoordComplex CoordComplex::subdivided() const {
  CoordComplex out;
  out.n = n;
  out.coords = coords;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int u, int v) {
    const auto key = std::minmax(u, v);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const auto& xu = coords[static_cast<std::size_t>(u)];
    const auto& xv = coords[static_cast<std::size_t>(v)];
    const Rational d = dot(xu, xv);
    if (sgn(d) == 0)
      throw std::logic_error("projective mesh: perpendicular edge lift");
    std::vector<Rational> m(xu.size());
    for (std::size_t i = 0; i < xu.size(); ++i)
      m[i] = (xu[i] + (sgn(d) > 0 ? xv[i] : -xv[i])) / 2;
    out.coords.push_back(std::move(m));
    const int id = static_cast<int>(out.coords.size()) - 1;
    midpoint.emplace(key, id);
    return id;
  };

  // Angle proxy for picking the short diagonal of the central octahedron.
  // (Explicit return type: gmpxx expression templates must not escape.)
  auto closeness = [&](int u, int v) -> Rational {
    const auto& xu = out.coords[static_cast<std::size_t>(u)];
    const auto& xv = out.coords[static_cast<std::size_t>(v)];
    const Rational d = dot(xu, xv);
    return (d * d) / (dot(xu, xu) * dot(xv, xv));
  };

  for (const auto& cell : cells) {
    if (cell.size() == 2) {
      const int m = mid(cell[0], cell[1]);
      out.cells.push_back({cell[0], m});
      out.cells.push_back({m, cell[1]});
    } else if (cell.size() == 3) {
      const int ab = mid(cell[0], cell[1]);
      const int bc = mid(cell[1], cell[2]);
      const int ca = mid(cell[2], cell[0]);
      out.cells.push_back({cell[0], ab, ca});
      out.cells.push_back({cell[1], bc, ab});
      out.cells.push_back({cell[2], ca, bc});
      out.cells.push_back({ab, bc, ca});
    } else if (cell.size() == 4) {
      const int m01 = mid(cell[0], cell[1]);
      const int m02 = mid(cell[0], cell[2]);
      const int m03 = mid(cell[0], cell[3]);
      const int m12 = mid(cell[1], cell[2]);
      const int m13 = mid(cell[1], cell[3]);
      const int m23 = mid(cell[2], cell[3]);
      out.cells.push_back({cell[0], m01, m02, m03});
      out.cells.push_back({cell[1], m01, m12, m13});
      out.cells.push_back({cell[2], m02, m12, m23});
      out.cells.push_back({cell[3], m03, m13, m23});
      // Central octahedron: diagonals pair the three "opposite" midpoints.
      const std::array<std::pair<int, int>, 3> diagonals = {
          std::make_pair(m01, m23), std::make_pair(m02, m13),
          std::make_pair(m03, m12)};
      int best = 0;
      for (int i = 1; i < 3; ++i)
        if (closeness(diagonals[static_cast<std::size_t>(i)].first,
                      diagonals[static_cast<std::size_t>(i)].second) >
            closeness(diagonals[static_cast<std::size_t>(best)].first,
                      diagonals[static_cast<std::size_t>(best)].second))
          best = i;
      const auto [da, db] = diagonals[static_cast<std::size_t>(best)];
      // Equatorial square around the chosen diagonal, in cyclic order.
      std::vector<int> others;
      for (const auto& dpair : diagonals)
        if (dpair.first != da) {
          others.push_back(dpair.first);
          others.push_back(dpair.second);
        }
      // others holds the two remaining diagonals (e0, e2) and (e1, e3); the
      // square cycle alternates between them.
      const int e0 = others[0], e2 = others[1], e1 = others[2], e3 = others[3];
      out.cells.push_back({da, db, e0, e1});
      out.cells.push_back({da, db, e1, e2});
      out.cells.push_back({da, db, e2, e3});
      out.cells.push_back({da, db, e3, e0});
    } else {
      throw std::logic_error("projective mesh: unsupported cell size");
    }
  }
  return out;
}

CoordComplex CoordComplex::at_resolution(int subdivisions) const {
  if (subdivisions < 0)
    throw std::invalid_argument("at_resolution: negative subdivision count");
  CoordComplex c = *this;
  for (int i = 0; i < subdivisions; ++i) c = c.subdivided();
  return c;
}

CoordComplex projective_mesh(int n) {
  if (n == 1) {
    CoordComplex c;
    c.n = 1;
    c.coords = {{Rational(1), Rational(0)},
                {Rational(3, 5), Rational(4, 5)},
                {Rational(0), Rational(1)},
                {Rational(-3, 5), Rational(4, 5)}};
    c.cells = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return c;
  }
  if (n == 2 || n == 3) return cross_polytope_quotient(n + 1);
  throw std::invalid_argument("projective_mesh: n must be 1, 2 or 3");
}

}  // namespace quadrics
