#pragma once

#include <optional>

#include "quadrics/homology.hpp"
#include "quadrics/projective_mesh.hpp"
#include "quadrics/qform.hpp"

namespace quadrics {

/// Sublevel-set approximation of the common zero locus X in projective
/// n-space (n <= 3): on a refined rational triangulation, keep the closed
/// simplices all of whose vertices x satisfy
///     F(x) = sum_i q_i(x)^2  <=  tau * |x|^4,
/// a scale-invariant exact rational test. Results are accepted only when the
/// Betti vector is identical at two consecutive resolutions.
struct VarietyApprox {
  SimplicialComplex complex;  // retained subcomplex at the finer resolution
  BettiVector betti;
  bool stable = false;
  bool empty_certified = false;  // empty and still empty at 4*tau
  Rational tau;
  int resolution = 0;  // the finer of the two compared resolutions
};

/// resolution is the base subdivision count of the projective mesh; the run
/// compares base and base+1. With no tau the threshold is derived from the
/// vertex minima of F: a stagnating minimum across resolutions signals an
/// empty X (checked at tau and 4*tau), a shrinking minimum calibrates tau
/// from the cells around the smallest values.
VarietyApprox approximate_variety(const QuadricSystem& sys, int resolution,
                                  std::optional<Rational> tau = std::nullopt);

/// Default base resolution per ambient dimension (keeps the finer mesh at a
/// desk-scale cell count).
int default_oracle_resolution(int n);

}  // namespace quadrics
