#include "quadrics/instance.hpp"

#include <random>
#include <stdexcept>

#include "json_util.hpp"

namespace quadrics {

namespace detail {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational string or integer");
}

QForm qform_from_json(const Json& j, int expected_dim) {
  if (!j.is_array()) throw std::invalid_argument("form must be a matrix");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(rational_from_json(cell));
    rows.push_back(std::move(r));
  }
  if (static_cast<int>(rows.size()) != expected_dim)
    throw std::invalid_argument("matrix size != n+1");
  return QForm::from_dense(rows);
}

Json qform_to_json(const QForm& q) {
  Json rows = Json::array();
  for (int i = 0; i < q.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < q.dim(); ++j) row.push_back(to_string(q.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json instance_to_json(const InstanceFile& instance) {
  Json j;
  j["n"] = instance.n;
  Json forms = Json::array();
  for (const auto& f : instance.forms) forms.push_back(qform_to_json(f));
  j["forms"] = std::move(forms);
  if (instance.seed) j["seed"] = *instance.seed;
  if (instance.epsilon) j["epsilon"] = to_string(*instance.epsilon);
  if (instance.p_override) j["p"] = qform_to_json(*instance.p_override);
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("forms"))
    throw std::invalid_argument("instance JSON: need {\"n\": ..., \"forms\": [...]}");
  InstanceFile instance;
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("instance JSON: n must be an integer");
  instance.n = j["n"].get<int>();
  if (instance.n < 0) throw std::invalid_argument("instance JSON: n must be >= 0");
  if (!j["forms"].is_array() || j["forms"].empty())
    throw std::invalid_argument("instance JSON: forms must be a nonempty array");
  for (const auto& f : j["forms"])
    instance.forms.push_back(qform_from_json(f, instance.n + 1));
  if (j.contains("seed")) instance.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("epsilon")) instance.epsilon = rational_from_json(j["epsilon"]);
  if (j.contains("p")) instance.p_override = qform_from_json(j["p"], instance.n + 1);
  return instance;
}

}  // namespace detail

InstanceFile parse_instance_json(const std::string& text) {
  detail::Json j;
  try {
    j = detail::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  return detail::instance_from_json(j);
}

std::string emit_instance_json(const InstanceFile& instance) {
  return detail::instance_to_json(instance).dump(2) + "\n";
}

QuadricSystem to_system(const InstanceFile& instance) {
  return QuadricSystem(instance.n, instance.forms);
}

InstanceFile gen_instance(std::uint64_t seed, int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("gen_instance: need k, n >= 1");
  InstanceFile instance;
  instance.n = n;
  instance.seed = seed;
  std::mt19937_64 rng(seed);
  for (int f = 0; f < k; ++f) {
    QForm q(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j) {
        const long numerator = static_cast<long>(rng() % 129) - 64;
        q.set_entry(i, j, make_rational(numerator, 64));
      }
    instance.forms.push_back(std::move(q));
  }
  return instance;
}

}  // namespace quadrics
