#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadrics/qform.hpp"
#include "quadrics/sphere_mesh.hpp"

namespace quadrics {

// k = 3 analysis. The degenerate locus of omega q - eps p on the 2-sphere is
// traced on a mesh whose vertices v carry exact signs of
// det((v/|v|) q - eps p). Normalizing v introduces s = |v| = sqrt(|v|^2),
// irrational in general; every quantity we need expands as A + s B with A, B
// rational and s^2 = |v|^2, so signs are decided exactly by comparing A^2
// against |v|^2 B^2. No coordinates are ever rounded.

/// Exact sign (+1/-1) of det((v/|v|) q - eps p); an exact zero throws
/// VertexOnCurve (the mesh must be jittered).
int exact_sign(const QuadricSystem& sys, const Rational& eps, const QForm& p,
               const std::vector<Rational>& v);

/// i^- of (v/|v|) q - eps p, decided exactly through the same A + s B
/// expansion of the characteristic polynomial coefficients, then Descartes'
/// count on the certified signs.
int negative_index_at_vertex(const QuadricSystem& sys, const Rational& eps,
                             const QForm& p, const std::vector<Rational>& v);

/// Signs of the two lowest characteristic-polynomial coefficients at a
/// vertex: a0 (the determinant) and a1. A corank >= 2 point zeroes both.
std::pair<int, int> low_coefficient_signs(const QuadricSystem& sys,
                                          const Rational& eps, const QForm& p,
                                          const std::vector<Rational>& v);

struct SignField {
  std::vector<int> signs;  // per vertex, +1 or -1
};

/// Evaluates the sign field over the whole mesh. Vertices that land exactly
/// on the curve are nudged (deterministically, a few attempts) before giving
/// up with VertexOnCurve; the mesh is modified in place in that case.
SignField evaluate_sign_field(const QuadricSystem& sys, const Rational& eps,
                              const QForm& p, SphereMesh& mesh);

struct CurveGraph {
  int components = 0;
  /// Crossing edges as sorted vertex pairs, with the curve component each
  /// belongs to.
  std::vector<std::pair<std::pair<int, int>, int>> crossing_edges;
  /// For each triangle, -1 if uncut, else the component its crossing pair
  /// belongs to.
  std::vector<int> triangle_component;
};

/// Extracts the crossing-edge graph and counts closed curve components.
/// Every triangle is crossed by 0 or 2 edges (a parity consequence of the
/// certified two-valued sign field).
CurveGraph trace_curve(const SphereMesh& mesh, const SignField& field);

struct RegionInfo {
  int label = -1;          // i^- on the region
  int sample_vertex = -1;  // where the label was evaluated
  int triangle_count = 0;
};

struct CorankFlag {
  int triangle = -1;
  std::array<Rational, 3> location;  // a representative vertex position
};

struct NetAnalysis {
  int curve_components = 0;
  int betti_sigma = 0;  // 2 per smooth closed component
  std::vector<RegionInfo> regions;
  std::vector<int> region_of_triangle;  // -1 for cut triangles
  int mu = 0;
  int nu = 0;
  std::vector<CorankFlag> corank2_flags;
  Integer bound;  // n+1 - 2(mu-nu) + betti_sigma/2
  bool stabilized = false;
  int mesh_level = 0;
  Rational epsilon;

  /// Curve components straddling label level j (boundary circles of the
  /// sublevel set {i^- <= j}), keyed by component id -> (low side, high side).
  std::map<int, std::pair<int, int>> component_side_labels;
};

/// Flood-fills the uncut triangles into regions, labels each region by an
/// exact i^- evaluation, checks that labels jump by exactly 1 across every
/// crossing edge, and assembles the instance bound. Throws NotGeneric on an
/// inconsistent label structure.
NetAnalysis region_labels(const QuadricSystem& sys, const Rational& eps,
                          const QForm& p, const SphereMesh& mesh,
                          const SignField& field, const CurveGraph& curve);

/// Advisory corank-2 scan: flags triangles where both a0 and a1 change sign,
/// the mesh-resolution shadow of a dim ker >= 2 point. Candidate triangles
/// are refined locally (midpoint subdivision, down to local_depth extra
/// levels): a genuine corank-2 crossing keeps both signs mixed at every
/// depth, while two nearby-but-disjoint zero curves separate and clear. An
/// empty list supports (but does not prove) generic smoothness.
std::vector<CorankFlag> corank2_scan(const QuadricSystem& sys, const Rational& eps,
                                     const QForm& p, const SphereMesh& mesh,
                                     int local_depth = 5);

struct Net3Options {
  int base_level = 3;
  int max_level = 7;
  bool run_corank_scan = true;
  int corank_local_depth = 5;
};

/// Runs the full pipeline at increasing mesh levels until two consecutive
/// levels agree on (component count, region label multiset, mu, nu); the
/// result carries stabilized = true and the finer level's data. Throws
/// MeshTooCoarse when the level budget is exhausted.
NetAnalysis analyze_net(const QuadricSystem& sys, const Rational& eps,
                        const QForm& p, const Net3Options& options = {});

/// Triangles of the closed sublevel set {i^- <= j}: the uncut triangles of
/// regions labeled <= j plus the cut triangles along curve components that
/// are interior to the sublevel (both side labels <= j). Feeding these to the
/// GF(2) homology pipeline gives an independent Betti count for the
/// half-boundary identity b(sublevel) = (number of straddling circles).
std::vector<std::array<int, 3>> sublevel_triangles(const SphereMesh& mesh,
                                                   const CurveGraph& curve,
                                                   const NetAnalysis& analysis,
                                                   int j);

/// Plot-data export: one "segment" row per cut triangle (approximate curve
/// chord endpoints) and one "region" row per region sample point. CSV with a
/// type discriminator column, documented in the README.
std::string plot_data_csv(const SphereMesh& mesh, const SignField& field,
                          const CurveGraph& curve, const NetAnalysis& analysis);

}  // namespace quadrics
