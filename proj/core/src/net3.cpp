#include "quadrics/net3.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quadrics/errors.hpp"
#include "quadrics/linalg.hpp"
#include "quadrics/quad_ext.hpp"

namespace quadrics {

namespace {

Rational norm2_of(const std::vector<Rational>& v) {
  Rational n(0);
  for (const auto& c : v) n += c * c;
  return n;
}

// det((v/|v|) q - eps p) and i^-((v/|v|) q - eps p) share the scaling trick:
// multiplying by s = |v| > 0 preserves inertia and determinant sign (up to a
// positive factor), and (v.q) - eps*s*p has entries a + s*b with a, b
// rational. When |v|^2 is a perfect square s is rational and everything
// collapses to plain rational arithmetic; otherwise we compute in Q(s).

std::vector<int> char_poly_signs(const QuadricSystem& sys, const Rational& eps,
                                 const QForm& p, const std::vector<Rational>& v,
                                 Inertia* inertia_out) {
  if (static_cast<int>(v.size()) != sys.k())
    throw std::invalid_argument("vertex dimension != k");
  const Rational n2 = norm2_of(v);
  if (sgn(n2) == 0) throw std::invalid_argument("zero vertex");
  const int dim = sys.n + 1;

  QForm combined(dim);
  for (int l = 0; l < sys.k(); ++l)
    combined += sys.forms[static_cast<std::size_t>(l)] * v[static_cast<std::size_t>(l)];

  std::vector<int> signs;
  if (auto s = exact_sqrt(n2)) {
    QForm m = combined + p * (-eps * *s);
    const auto coeffs = char_poly_coeffs(m.to_matrix());
    signs.reserve(coeffs.size());
    for (const auto& c : coeffs) signs.push_back(sgn(c));
    if (inertia_out) *inertia_out = inertia_from_char_poly(coeffs);
  } else {
    Matrix<QuadExt> m(static_cast<std::size_t>(dim),
                      std::vector<QuadExt>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            QuadExt(combined.entry(i, j), -eps * p.entry(i, j), n2);
    const auto coeffs = char_poly_coeffs(m);
    signs.reserve(coeffs.size());
    for (const auto& c : coeffs) signs.push_back(sign_of(c));
    if (inertia_out) *inertia_out = inertia_from_char_poly(coeffs);
  }
  return signs;
}

int det_sign(const QuadricSystem& sys, const Rational& eps, const QForm& p,
             const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != sys.k())
    throw std::invalid_argument("vertex dimension != k");
  const Rational n2 = norm2_of(v);
  if (sgn(n2) == 0) throw std::invalid_argument("zero vertex");
  const int dim = sys.n + 1;
  QForm combined(dim);
  for (int l = 0; l < sys.k(); ++l)
    combined += sys.forms[static_cast<std::size_t>(l)] * v[static_cast<std::size_t>(l)];
  if (auto s = exact_sqrt(n2)) {
    QForm m = combined + p * (-eps * *s);
    return sgn(determinant(m.to_matrix()));
  }
  Matrix<QuadExt> m(static_cast<std::size_t>(dim),
                    std::vector<QuadExt>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          QuadExt(combined.entry(i, j), -eps * p.entry(i, j), n2);
  return sign_of(determinant(m));
}

std::vector<Rational> vertex_vector(const SphereMesh& mesh, int vertex) {
  const auto& v = mesh.vertices[static_cast<std::size_t>(vertex)];
  return {v[0], v[1], v[2]};
}

}  // namespace

int exact_sign(const QuadricSystem& sys, const Rational& eps, const QForm& p,
               const std::vector<Rational>& v) {
  const int s = det_sign(sys, eps, p, v);
  if (s == 0) throw VertexOnCurve("determinant vanishes exactly at a vertex");
  return s;
}

int negative_index_at_vertex(const QuadricSystem& sys, const Rational& eps,
                             const QForm& p, const std::vector<Rational>& v) {
  Inertia inertia;
  char_poly_signs(sys, eps, p, v, &inertia);
  if (inertia.ker != 0)
    throw VertexOnCurve("degenerate form at a vertex during labeling");
  return inertia.neg;
}

std::pair<int, int> low_coefficient_signs(const QuadricSystem& sys,
                                          const Rational& eps, const QForm& p,
                                          const std::vector<Rational>& v) {
  const auto signs = char_poly_signs(sys, eps, p, v, nullptr);
  return {signs[0], signs[1]};
}

SignField evaluate_sign_field(const QuadricSystem& sys, const Rational& eps,
                              const QForm& p, SphereMesh& mesh) {
  if (sys.k() != 3) throw std::invalid_argument("sign field: k must be 3");
  SignField field;
  field.signs.resize(mesh.vertices.size(), 0);
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    int attempt = 0;
    for (;;) {
      try {
        field.signs[v] = exact_sign(sys, eps, p, vertex_vector(mesh, static_cast<int>(v)));
        break;
      } catch (const VertexOnCurve&) {
        if (attempt >= 3) throw;
        mesh.nudge_vertex(static_cast<int>(v), attempt);
        ++attempt;
      }
    }
  }
  return field;
}

CurveGraph trace_curve(const SphereMesh& mesh, const SignField& field) {
  CurveGraph graph;
  graph.triangle_component.assign(mesh.triangles.size(), -1);

  const auto edge_map = mesh.edge_triangles();
  std::map<std::pair<int, int>, int> crossing_id;
  for (const auto& [edge, tris] : edge_map) {
    if (tris.size() != 2)
      throw std::logic_error("mesh edge not shared by exactly two triangles");
    if (field.signs[static_cast<std::size_t>(edge.first)] !=
        field.signs[static_cast<std::size_t>(edge.second)]) {
      const int id = static_cast<int>(crossing_id.size());
      crossing_id.emplace(edge, id);
    }
  }

  // Each cut triangle pairs its two crossing edges; every crossing edge sits
  // in two triangles, so the pairing graph is a disjoint union of cycles.
  std::vector<std::vector<int>> links(crossing_id.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    std::vector<int> cut;
    for (int e = 0; e < 3; ++e) {
      const auto key = std::minmax(tri[static_cast<std::size_t>(e)],
                                   tri[static_cast<std::size_t>((e + 1) % 3)]);
      auto it = crossing_id.find(key);
      if (it != crossing_id.end()) cut.push_back(it->second);
    }
    if (cut.size() == 1 || cut.size() == 3)
      throw MeshTooCoarse("triangle with odd crossing count");
    if (cut.size() == 2) {
      links[static_cast<std::size_t>(cut[0])].push_back(cut[1]);
      links[static_cast<std::size_t>(cut[1])].push_back(cut[0]);
      graph.triangle_component[t] = -2;  // resolved to a component id below
    }
  }

  std::vector<int> component(crossing_id.size(), -1);
  int components = 0;
  for (std::size_t start = 0; start < links.size(); ++start) {
    if (component[start] != -1) continue;
    const int id = components++;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      if (component[static_cast<std::size_t>(node)] != -1) continue;
      component[static_cast<std::size_t>(node)] = id;
      for (int next : links[static_cast<std::size_t>(node)])
        if (component[static_cast<std::size_t>(next)] == -1) stack.push_back(next);
    }
  }
  graph.components = components;

  graph.crossing_edges.reserve(crossing_id.size());
  for (const auto& [edge, id] : crossing_id)
    graph.crossing_edges.emplace_back(edge, component[static_cast<std::size_t>(id)]);

  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    if (graph.triangle_component[t] != -2) continue;
    const auto& tri = mesh.triangles[t];
    for (int e = 0; e < 3 && graph.triangle_component[t] < 0; ++e) {
      const auto key = std::minmax(tri[static_cast<std::size_t>(e)],
                                   tri[static_cast<std::size_t>((e + 1) % 3)]);
      auto it = crossing_id.find(key);
      if (it != crossing_id.end())
        graph.triangle_component[t] = component[static_cast<std::size_t>(it->second)];
    }
  }
  return graph;
}

NetAnalysis region_labels(const QuadricSystem& sys, const Rational& eps,
                          const QForm& p, const SphereMesh& mesh,
                          const SignField& field, const CurveGraph& curve) {
  (void)field;  // the crossing structure already encodes the signs
  NetAnalysis out;
  out.epsilon = eps;
  out.mesh_level = mesh.level;
  out.curve_components = curve.components;
  out.betti_sigma = 2 * curve.components;

  // Flood fill uncut triangles across shared edges.
  const auto edge_map = mesh.edge_triangles();
  std::map<std::pair<int, int>, bool> edge_is_crossing;
  for (const auto& [edge, comp] : curve.crossing_edges)
    edge_is_crossing[edge] = true;

  std::vector<std::vector<int>> neighbors(mesh.triangles.size());
  for (const auto& [edge, tris] : edge_map) {
    if (edge_is_crossing.count(edge)) continue;
    neighbors[static_cast<std::size_t>(tris[0])].push_back(tris[1]);
    neighbors[static_cast<std::size_t>(tris[1])].push_back(tris[0]);
  }

  out.region_of_triangle.assign(mesh.triangles.size(), -1);
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    if (curve.triangle_component[t] >= 0) continue;  // cut triangle
    if (out.region_of_triangle[t] != -1) continue;
    const int region = static_cast<int>(out.regions.size());
    out.regions.push_back({});
    std::vector<int> stack{static_cast<int>(t)};
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      if (out.region_of_triangle[static_cast<std::size_t>(cur)] != -1) continue;
      if (curve.triangle_component[static_cast<std::size_t>(cur)] >= 0) continue;
      out.region_of_triangle[static_cast<std::size_t>(cur)] = region;
      out.regions[static_cast<std::size_t>(region)].triangle_count += 1;
      for (int nb : neighbors[static_cast<std::size_t>(cur)]) stack.push_back(nb);
    }
    out.regions[static_cast<std::size_t>(region)].sample_vertex =
        mesh.triangles[t][0];
  }
  if (out.regions.empty())
    throw MeshTooCoarse("no uncut triangle anywhere; mesh far too coarse");

  // Exact labels: one evaluation per region plus every crossing endpoint.
  std::map<int, int> vertex_label;
  auto label_at = [&](int vertex) {
    auto it = vertex_label.find(vertex);
    if (it != vertex_label.end()) return it->second;
    const int l =
        negative_index_at_vertex(sys, eps, p, vertex_vector(mesh, vertex));
    vertex_label.emplace(vertex, l);
    return l;
  };

  for (auto& region : out.regions) region.label = label_at(region.sample_vertex);

  bool have_extremes = false;
  for (const auto& region : out.regions) {
    if (!have_extremes) {
      out.mu = out.nu = region.label;
      have_extremes = true;
    }
    out.mu = std::max(out.mu, region.label);
    out.nu = std::min(out.nu, region.label);
  }

  // Transversality probe: labels across every crossing edge differ by one.
  // This also catches thin sliver regions the flood fill cannot see.
  for (const auto& [edge, component] : curve.crossing_edges) {
    const int lu = label_at(edge.first);
    const int lv = label_at(edge.second);
    if (std::abs(lu - lv) != 1)
      throw NotGeneric("label jump != 1 across a curve edge");
    out.mu = std::max({out.mu, lu, lv});
    out.nu = std::min({out.nu, lu, lv});
    const int low = std::min(lu, lv), high = std::max(lu, lv);
    auto it = out.component_side_labels.find(component);
    if (it == out.component_side_labels.end()) {
      out.component_side_labels.emplace(component, std::make_pair(low, high));
    } else if (it->second != std::make_pair(low, high)) {
      throw NotGeneric("inconsistent side labels along a curve component");
    }
  }

  out.bound =
      Integer(sys.n + 1 - 2 * (out.mu - out.nu) + out.betti_sigma / 2);
  return out;
}

namespace {

bool both_mixed(const std::array<std::pair<int, int>, 3>& s) {
  auto mixed = [](int a, int b, int c) {
    const bool has_pos = a > 0 || b > 0 || c > 0;
    const bool has_neg = a < 0 || b < 0 || c < 0;
    const bool has_zero = a == 0 || b == 0 || c == 0;
    return has_zero || (has_pos && has_neg);
  };
  return mixed(s[0].first, s[1].first, s[2].first) &&
         mixed(s[0].second, s[1].second, s[2].second);
}

// Recursive local refinement of a candidate triangle: persistent double sign
// mixing down to the depth budget indicates a genuine common zero of a0 and
// a1 (a corank >= 2 point); disjoint curves eventually land in different
// subtriangles and clear.
bool corank_candidate_persists(const QuadricSystem& sys, const Rational& eps,
                               const QForm& p,
                               const std::array<std::vector<Rational>, 3>& corner,
                               const std::array<std::pair<int, int>, 3>& signs,
                               int depth) {
  if (!both_mixed(signs)) return false;
  if (depth == 0) return true;
  std::array<std::vector<Rational>, 3> mid;
  std::array<std::pair<int, int>, 3> mid_signs;
  for (int e = 0; e < 3; ++e) {
    const auto& a = corner[static_cast<std::size_t>(e)];
    const auto& b = corner[static_cast<std::size_t>((e + 1) % 3)];
    std::vector<Rational> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = (a[i] + b[i]) / 2;
    mid_signs[static_cast<std::size_t>(e)] = low_coefficient_signs(sys, eps, p, m);
    mid[static_cast<std::size_t>(e)] = std::move(m);
  }
  const auto sub = [&](const std::vector<Rational>& v0, std::pair<int, int> s0,
                       const std::vector<Rational>& v1, std::pair<int, int> s1,
                       const std::vector<Rational>& v2, std::pair<int, int> s2) {
    return corank_candidate_persists(sys, eps, p, {v0, v1, v2}, {s0, s1, s2},
                                     depth - 1);
  };
  return sub(corner[0], signs[0], mid[0], mid_signs[0], mid[2], mid_signs[2]) ||
         sub(corner[1], signs[1], mid[1], mid_signs[1], mid[0], mid_signs[0]) ||
         sub(corner[2], signs[2], mid[2], mid_signs[2], mid[1], mid_signs[1]) ||
         sub(mid[0], mid_signs[0], mid[1], mid_signs[1], mid[2], mid_signs[2]);
}

}  // namespace

std::vector<CorankFlag> corank2_scan(const QuadricSystem& sys, const Rational& eps,
                                     const QForm& p, const SphereMesh& mesh,
                                     int local_depth) {
  std::vector<std::pair<int, int>> signs(mesh.vertices.size());
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    signs[v] = low_coefficient_signs(sys, eps, p,
                                     vertex_vector(mesh, static_cast<int>(v)));

  std::vector<CorankFlag> flags;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    const std::array<std::vector<Rational>, 3> corner = {
        vertex_vector(mesh, tri[0]), vertex_vector(mesh, tri[1]),
        vertex_vector(mesh, tri[2])};
    const std::array<std::pair<int, int>, 3> corner_signs = {
        signs[static_cast<std::size_t>(tri[0])],
        signs[static_cast<std::size_t>(tri[1])],
        signs[static_cast<std::size_t>(tri[2])]};
    if (corank_candidate_persists(sys, eps, p, corner, corner_signs, local_depth)) {
      CorankFlag flag;
      flag.triangle = static_cast<int>(t);
      flag.location = mesh.vertices[static_cast<std::size_t>(tri[0])];
      flags.push_back(std::move(flag));
    }
  }
  return flags;
}

std::vector<std::array<int, 3>> sublevel_triangles(const SphereMesh& mesh,
                                                   const CurveGraph& curve,
                                                   const NetAnalysis& analysis,
                                                   int j) {
  std::vector<std::array<int, 3>> triangles;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const int region = analysis.region_of_triangle[t];
    bool keep = false;
    if (region >= 0) {
      keep = analysis.regions[static_cast<std::size_t>(region)].label <= j;
    } else {
      const int component = curve.triangle_component[t];
      const auto side = analysis.component_side_labels.find(component);
      keep = side != analysis.component_side_labels.end() &&
             side->second.second <= j;
    }
    if (keep) triangles.push_back(mesh.triangles[t]);
  }
  return triangles;
}

namespace {

struct NetSignature {
  int components = 0;
  std::vector<int> labels;  // sorted region labels
  int mu = 0, nu = 0;
  friend bool operator==(const NetSignature&, const NetSignature&) = default;
};

NetSignature signature_of(const NetAnalysis& a) {
  NetSignature s;
  s.components = a.curve_components;
  for (const auto& r : a.regions) s.labels.push_back(r.label);
  std::sort(s.labels.begin(), s.labels.end());
  s.mu = a.mu;
  s.nu = a.nu;
  return s;
}

}  // namespace

NetAnalysis analyze_net(const QuadricSystem& sys, const Rational& eps,
                        const QForm& p, const Net3Options& options) {
  if (sys.k() != 3) throw std::invalid_argument("analyze_net: k must be 3");
  SphereMesh mesh = SphereMesh::at_level(options.base_level);
  std::optional<NetSignature> previous;
  std::exception_ptr last_error;
  for (int level = options.base_level; level <= options.max_level; ++level) {
    try {
      SignField field = evaluate_sign_field(sys, eps, p, mesh);
      const CurveGraph curve = trace_curve(mesh, field);
      NetAnalysis analysis = region_labels(sys, eps, p, mesh, field, curve);
      const NetSignature sig = signature_of(analysis);
      if (previous && *previous == sig) {
        analysis.stabilized = true;
        // Certify smoothness evidence once, at the reported resolution.
        if (options.run_corank_scan)
          analysis.corank2_flags =
              corank2_scan(sys, eps, p, mesh, options.corank_local_depth);
        return analysis;
      }
      previous = sig;
      last_error = nullptr;
    } catch (const NotGeneric&) {
      // Two curve branches inside one cell fake a label inconsistency; give
      // finer meshes a chance before declaring the instance non-generic.
      previous.reset();
      last_error = std::current_exception();
    } catch (const MeshTooCoarse&) {
      previous.reset();
      last_error = std::current_exception();
    }
    mesh = mesh.refined();
  }
  if (last_error) std::rethrow_exception(last_error);
  throw MeshTooCoarse("net analysis did not stabilize within the level budget");
}

std::string plot_data_csv(const SphereMesh& mesh, const SignField& field,
                          const CurveGraph& curve, const NetAnalysis& analysis) {
  (void)field;
  std::ostringstream out;
  out << "type,id,label,x1,y1,z1,x2,y2,z2\n";
  const auto edge_map = mesh.edge_triangles();
  auto midpoint = [&](const std::pair<int, int>& edge) {
    std::array<double, 3> m{};
    for (int c = 0; c < 3; ++c) {
      const Rational x =
          (mesh.vertices[static_cast<std::size_t>(edge.first)][static_cast<std::size_t>(c)] +
           mesh.vertices[static_cast<std::size_t>(edge.second)][static_cast<std::size_t>(c)]) /
          2;
      m[static_cast<std::size_t>(c)] = x.get_d();
    }
    return m;
  };
  std::map<std::pair<int, int>, int> crossing;
  for (const auto& [edge, comp] : curve.crossing_edges) crossing[edge] = comp;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    if (curve.triangle_component[t] < 0) continue;
    const auto& tri = mesh.triangles[t];
    std::vector<std::pair<int, int>> cut;
    for (int e = 0; e < 3; ++e) {
      const auto key = std::minmax(tri[static_cast<std::size_t>(e)],
                                   tri[static_cast<std::size_t>((e + 1) % 3)]);
      if (crossing.count(key)) cut.push_back(key);
    }
    const auto a = midpoint(cut[0]);
    const auto b = midpoint(cut[1]);
    out << "segment," << curve.triangle_component[t] << ",,";
    out << a[0] << ',' << a[1] << ',' << a[2] << ',' << b[0] << ',' << b[1]
        << ',' << b[2] << "\n";
  }
  for (std::size_t r = 0; r < analysis.regions.size(); ++r) {
    const auto& region = analysis.regions[r];
    const auto& v = mesh.vertices[static_cast<std::size_t>(region.sample_vertex)];
    out << "region," << r << ',' << region.label << ',' << v[0].get_d() << ','
        << v[1].get_d() << ',' << v[2].get_d() << ",,,\n";
  }
  return out.str();
}

}  // namespace quadrics
