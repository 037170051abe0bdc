#pragma once

#include <stdexcept>
#include <string>

namespace quadrics {

// Recoverable analysis signals. The perturbation driver catches these and
// reacts (smaller epsilon, fresh p, finer mesh); they are not user errors.

/// Degenerate root structure (multiple root, label jump != 1). Caller must
/// re-perturb.
struct NotTransversal : std::runtime_error {
  explicit NotTransversal(const std::string& what) : std::runtime_error(what) {}
};

/// Non-generic configuration detected (root at the parametrization's excluded
/// point, suspected corank-2 point, ...).
struct NotGeneric : std::runtime_error {
  explicit NotGeneric(const std::string& what) : std::runtime_error(what) {}
};

/// A mesh vertex landed exactly on the traced curve; the mesh needs a jitter.
struct VertexOnCurve : std::runtime_error {
  explicit VertexOnCurve(const std::string& what) : std::runtime_error(what) {}
};

/// Mesh resolution exhausted without a consistent picture.
struct MeshTooCoarse : std::runtime_error {
  explicit MeshTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quadrics
