#pragma once

// Internal JSON helpers shared by instance and report serialization; not
// installed.

#include <json.hpp>

#include "quadrics/instance.hpp"

namespace quadrics::detail {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
QForm qform_from_json(const Json& j, int expected_dim);
Json qform_to_json(const QForm& q);
Json instance_to_json(const InstanceFile& instance);
InstanceFile instance_from_json(const Json& j);

}  // namespace quadrics::detail
