#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadrics/net3.hpp"
#include "quadrics/pencil2.hpp"
#include "quadrics/qform.hpp"

namespace quadrics {

// Perturbation protocol: pick a positive definite p, walk a decreasing
// epsilon schedule until the analyzer's invariant signature stabilizes, and
// certify genericity. Instances that never stabilize are retried with a
// seeded random p a bounded number of times.

enum class CertKind { TransversalK2, StableK3, GenericEps0, Failed };

std::string to_string(CertKind kind);

struct PerturbationCert {
  QForm p;
  Rational epsilon;
  int attempts = 0;  // p choices tried (1 = default p succeeded)
  CertKind kind = CertKind::Failed;
  std::string failure_reason;

  PerturbationCert() : p(1) {}
};

/// The identity form on n+1 variables.
QForm default_p(int n);

/// I plus seeded symmetric rational noise with entries bounded by magnitude
/// (must be < 1); positive definiteness is asserted by an exact inertia
/// check, and is automatic for magnitude < 1/(n+1) by diagonal dominance.
/// Deterministic per seed.
QForm randomize_p(std::uint64_t seed, int n, const Rational& magnitude);

struct GenericityResult {
  bool pass = false;
  std::string reason;  // machine-readable failure cause, empty on pass
};

/// Transversality certificate checks at a fixed epsilon (epsilon = 0 checks
/// the unperturbed sphere and enables the generic-case bound):
///   k=1  det(q1) != 0
///   k=2  circle polynomial squarefree, no root at the excluded point
///   k=3  no vertex zeros, consistent crossing parity, empty corank-2 scan
GenericityResult genericity_check(const QuadricSystem& sys, const QForm& p,
                                  const Rational& eps,
                                  const Net3Options& options = {});

struct ScheduleResult {
  PerturbationCert cert;
  std::optional<PencilAnalysis> pencil;  // populated for k = 2
  std::optional<NetAnalysis> net;        // populated for k = 3
};

/// Decreasing-epsilon stabilization. Starts at epsilon = m / (2(1+m)) where
/// m is the largest absolute entry over the forms (the "small enough" scale
/// is relative to the system's scale), halves, and accepts as soon as two
/// consecutive epsilons produce identical signatures (root count and label
/// cycle for k = 2; component count, label multiset and extremes for k = 3).
/// The accepted (smaller) epsilon is recorded. Gives up after 40 halvings.
ScheduleResult epsilon_schedule(const QuadricSystem& sys, const QForm& p,
                                const Net3Options& options = {});

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  std::optional<Rational> epsilon;    // force a fixed epsilon
  std::optional<QForm> p_override;
  std::optional<Rational> magnitude;  // retry noise amplitude
  bool eps0 = false;                  // strict generic (unperturbed) mode
  Net3Options net3;
  int max_p_retries = 8;
};

/// Full pipeline for k in {2, 3}: default p, epsilon schedule, then seeded
/// random-p retries on failure. With eps0 set, runs the epsilon = 0 checks
/// and analysis instead (no perturbation; fails rather than falling back).
ScheduleResult analyze_system(const QuadricSystem& sys, const AnalyzeOptions& options = {});

}  // namespace quadrics
