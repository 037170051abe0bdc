#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadrics/qform.hpp"

namespace quadrics {

/// On-disk instance: k dense symmetric rational matrices plus the ambient
/// projective dimension, with optional analysis overrides. Rational entries
/// are strings "p/q" (plain integers allowed on input).
struct InstanceFile {
  int n = 0;
  std::vector<QForm> forms;
  std::optional<std::uint64_t> seed;
  std::optional<Rational> epsilon;
  std::optional<QForm> p_override;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws std::invalid_argument on malformed JSON, malformed rationals,
/// asymmetry or dimension mismatch.
InstanceFile parse_instance_json(const std::string& text);
std::string emit_instance_json(const InstanceFile& instance);

QuadricSystem to_system(const InstanceFile& instance);

/// Seeded random instance: entries in [-1, 1] with denominator dividing 64,
/// identical output for identical seeds.
InstanceFile gen_instance(std::uint64_t seed, int k, int n);

}  // namespace quadrics
