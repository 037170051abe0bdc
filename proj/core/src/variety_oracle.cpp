#include "quadrics/variety_oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace quadrics {

namespace {

// F(x) / |x|^4 for a vertex representative; scale-invariant.
Rational normalized_objective(const QuadricSystem& sys,
                              const std::vector<Rational>& x) {
  Rational f(0);
  for (const auto& q : sys.forms) {
    const Rational v = eval(q, x);
    f += v * v;
  }
  Rational n2(0);
  for (const auto& c : x) n2 += c * c;
  return f / (n2 * n2);
}

std::vector<Rational> vertex_values(const QuadricSystem& sys,
                                    const CoordComplex& mesh) {
  std::vector<Rational> values;
  values.reserve(mesh.coords.size());
  for (const auto& x : mesh.coords) values.push_back(normalized_objective(sys, x));
  return values;
}

std::vector<std::vector<int>> per_form_signs(const QuadricSystem& sys,
                                             const CoordComplex& mesh) {
  std::vector<std::vector<int>> signs(sys.forms.size());
  for (std::size_t f = 0; f < sys.forms.size(); ++f) {
    signs[f].reserve(mesh.coords.size());
    for (const auto& x : mesh.coords)
      signs[f].push_back(sgn(eval(sys.forms[f], x)));
  }
  return signs;
}

// Every form changes sign (or vanishes) over the cell: the necessary
// condition for a transversal common zero inside it.
bool sign_candidate(const std::vector<std::vector<int>>& form_signs,
                    const std::vector<int>& cell) {
  for (const auto& signs : form_signs) {
    bool has_nonneg = false, has_nonpos = false;
    for (int v : cell) {
      const int s = signs[static_cast<std::size_t>(v)];
      has_nonneg |= s >= 0;
      has_nonpos |= s <= 0;
    }
    if (!has_nonneg || !has_nonpos) return false;
  }
  return true;
}

// Sublevel subcomplex of {F <= tau}. In pruned (auto-calibrated) mode the
// subcomplex is additionally clipped to the star neighborhood of the
// sign-candidate cells: a transversal zero lies inside a candidate cell, so
// this keeps an adaptively thin tube around the zero locus and discards both
// positive local dips of F and the fat outskirts of the sublevel region,
// whose self-contacts would fake extra topology.
SimplicialComplex retained_subcomplex(const CoordComplex& mesh,
                                      const std::vector<Rational>& values,
                                      const std::vector<std::vector<int>>& form_signs,
                                      const Rational& tau, bool prune) {
  std::vector<char> near_candidate(mesh.coords.size(), 0);
  if (prune) {
    for (const auto& cell : mesh.cells) {
      if (!sign_candidate(form_signs, cell)) continue;
      for (int v : cell) near_candidate[static_cast<std::size_t>(v)] = 1;
    }
  }

  std::vector<std::vector<int>> kept;
  for (const auto& cell : mesh.cells) {
    std::vector<int> sub;
    bool near = !prune;
    for (int v : cell) {
      if (values[static_cast<std::size_t>(v)] > tau) continue;
      sub.push_back(v);
      near |= near_candidate[static_cast<std::size_t>(v)] != 0;
    }
    if (!sub.empty() && near) kept.push_back(std::move(sub));
  }

  SimplicialComplex c;
  if (kept.empty()) {
    c.vertex_count = 0;
    return c;
  }
  return SimplicialComplex::from_maximal(std::move(kept));
}

Rational min_value(const std::vector<Rational>& values) {
  Rational m = values.front();
  for (const auto& v : values) m = std::min(m, v);
  return m;
}

}  // namespace

int default_oracle_resolution(int n) {
  switch (n) {
    case 1: return 5;
    case 2: return 4;
    case 3: return 2;
    default: throw std::invalid_argument("oracle: n must be 1, 2 or 3");
  }
}

VarietyApprox approximate_variety(const QuadricSystem& sys, int resolution,
                                  std::optional<Rational> tau_opt) {
  if (sys.n < 1 || sys.n > 3)
    throw std::invalid_argument("approximate_variety: n must be 1, 2 or 3");
  if (resolution < 0 || resolution > 7)
    throw std::invalid_argument("approximate_variety: resolution out of budget");

  const CoordComplex base = projective_mesh(sys.n);
  const CoordComplex coarse = base.at_resolution(resolution);
  const CoordComplex fine = coarse.subdivided();
  const std::vector<Rational> coarse_values = vertex_values(sys, coarse);
  const std::vector<Rational> fine_values = vertex_values(sys, fine);
  const Rational fine_min = min_value(fine_values);

  VarietyApprox out;
  out.resolution = resolution + 1;

  const std::vector<std::vector<int>> coarse_signs = per_form_signs(sys, coarse);
  const std::vector<std::vector<int>> fine_signs = per_form_signs(sys, fine);

  Rational tau;
  if (tau_opt) {
    tau = *tau_opt;
  } else {
    // Calibrate the threshold as the largest F value over the sign-candidate
    // cells of the COARSE mesh: the finer band is then at least as thick, so
    // refinement cannot break it apart. No candidate anywhere is the
    // empty-locus mode, with a threshold safely below the observed minimum.
    Rational band(0);
    bool any_candidate = false;
    for (const auto& cell : coarse.cells) {
      if (!sign_candidate(coarse_signs, cell)) continue;
      any_candidate = true;
      for (int v : cell)
        band = std::max(band, coarse_values[static_cast<std::size_t>(v)]);
    }
    tau = any_candidate ? band : fine_min / 8;
  }
  out.tau = tau;

  // A user-supplied threshold means the literal sublevel subcomplex; the
  // calibrated mode additionally prunes connected pieces without a
  // sign-candidate cell (positive local dips of F cannot contain a zero).
  const bool prune = !tau_opt.has_value();
  const SimplicialComplex coarse_complex =
      retained_subcomplex(coarse, coarse_values, coarse_signs, tau, prune);
  const SimplicialComplex fine_complex =
      retained_subcomplex(fine, fine_values, fine_signs, tau, prune);
  const BettiVector coarse_betti = betti_z2(coarse_complex);
  const BettiVector fine_betti = betti_z2(fine_complex);

  out.complex = fine_complex;
  out.betti = fine_betti;
  out.stable = coarse_betti == fine_betti;
  if (prune && out.stable && sgn(tau) > 0) {
    // Agreement across resolutions alone cannot rule out a too-fat band
    // whose self-contacts fake extra topology. A calibrated result must also
    // survive thinning of the sublevel part of the tube.
    const SimplicialComplex thinner =
        retained_subcomplex(fine, fine_values, fine_signs, tau / 4, prune);
    out.stable = betti_z2(thinner) == fine_betti;
  }
  if (prune && out.stable) {
    // Structural consistency: a generic zero locus is either empty or a
    // closed Z/2 manifold of dimension n - k, so its Betti vector obeys
    // Poincare duality. Tubes gluing distinct strands of the locus break
    // this long before they can be resolved away.
    const int expected_dim = sys.n - sys.k();
    const auto b = [&](int i) {
      return (i >= 0 && i < static_cast<int>(fine_betti.b.size()))
                 ? fine_betti.b[static_cast<std::size_t>(i)]
                 : 0L;
    };
    if (expected_dim < 0) {
      out.stable = fine_betti.total == 0;
    } else {
      for (std::size_t i = 0; i < fine_betti.b.size(); ++i)
        if (static_cast<int>(i) > expected_dim && fine_betti.b[i] != 0)
          out.stable = false;
      for (int i = 0; i <= expected_dim && out.stable; ++i)
        if (b(i) != b(expected_dim - i)) out.stable = false;
    }
  }

  if (fine_betti.total == 0 && tau < fine_min) {
    // Empty at tau; robust if still empty at 4*tau.
    const SimplicialComplex recheck =
        retained_subcomplex(fine, fine_values, fine_signs, 4 * tau, prune);
    out.empty_certified = betti_z2(recheck).total == 0 && out.stable;
  }
  return out;
}

}  // namespace quadrics
