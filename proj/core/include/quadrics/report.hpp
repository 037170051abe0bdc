#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadrics/instance.hpp"
#include "quadrics/perturb.hpp"
#include "quadrics/variety_oracle.hpp"

namespace quadrics {

// Report assembly: the analyze/bounds/oracle/gen/compare entry points the
// CLI wraps. Values that must survive JSON round trips are kept as exact
// strings.

struct StratumEntry {
  int r = 0;
  int codim = 0;
  bool certified_empty = false;  // by codimension alone
  std::optional<int> betti;
  std::optional<int> count;  // roots (k=2) or curve components (k=3)
  std::string note;
  friend bool operator==(const StratumEntry&, const StratumEntry&) = default;
};

struct BoundRow {
  std::string label;
  std::string exact;    // rational string
  std::string ceiling;  // integer string
  std::map<std::string, std::string> params;
  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct OracleEntry {
  std::vector<long> betti;
  long total = 0;
  bool stable = false;
  bool empty_certified = false;
  std::string tau;
  int resolution = 0;
  friend bool operator==(const OracleEntry&, const OracleEntry&) = default;
};

struct AnalysisReport {
  InstanceFile instance;
  int k = 0;
  int n = 0;
  std::string certificate;  // TransversalK2 | StableK3 | GenericEps0 | Failed
  std::string failure_reason;
  std::string epsilon;  // rational string, empty when not applicable
  int attempts = 0;
  std::optional<InstanceFile> p_used;  // reuses the matrix serialization
  std::vector<StratumEntry> strata;
  std::optional<int> mu;
  std::optional<int> nu;
  std::vector<int> labels;  // arc labels (k=2) or region labels (k=3)
  std::optional<std::string> instance_bound;  // integer string
  bool stabilized = false;
  std::optional<int> mesh_level;  // stabilized mesh level (k = 3)
  std::vector<BoundRow> closed_form_bounds;
  std::optional<OracleEntry> oracle;
  std::string notice;
  std::map<std::string, long> timing_ms;  // excluded from determinism claims

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct ReportOptions {
  std::optional<std::uint64_t> seed;  // falls back to the instance seed, then 0
  std::optional<Rational> epsilon;
  std::optional<Rational> magnitude;
  bool eps0 = false;
  bool with_oracle = false;
  std::optional<int> oracle_resolution;
  std::optional<Rational> oracle_tau;
  Net3Options net3;
};

/// Full pipeline: perturbation certificate, per-stratum data, instance bound,
/// closed-form bounds, optional oracle. k = 1 reports the direct n+1 bound;
/// k >= 4 reports closed-form bounds only, with a notice.
AnalysisReport analyze_instance(const InstanceFile& instance,
                                const ReportOptions& options = {});

std::string emit_report_json(const AnalysisReport& report);
AnalysisReport parse_report_json(const std::string& text);

/// Closed-form bound table for (k, n).
std::vector<BoundRow> bounds_table(int k, int n);
std::string bounds_table_csv(const std::vector<BoundRow>& rows);
std::string bounds_table_json(const std::vector<BoundRow>& rows);

struct CompareRow {
  std::uint64_t seed = 0;
  int k = 0;
  int n = 0;
  std::string certificate;
  bool transversal = false;
  int mu = 0;
  int nu = 0;
  std::optional<long> instance_bound;
  std::string numerical_bound;
  std::string milnor;
  std::string basu_ceiling;
  std::optional<long> oracle_total;
  bool oracle_stable = false;
  std::optional<long> slack_vs_numerical;
  std::optional<long> slack_vs_oracle;
};

/// Batch comparison over generated instances, rows in seed order.
std::vector<CompareRow> compare_run(std::uint64_t seed_lo, std::uint64_t seed_hi,
                                    int k, int n, const ReportOptions& options = {});
std::string compare_csv(const std::vector<CompareRow>& rows);

/// Curve/region plot data for a completed k = 3 analysis (re-traces at the
/// certified epsilon and stabilized mesh level).
std::string analysis_plot_csv(const InstanceFile& instance,
                              const AnalysisReport& report);

}  // namespace quadrics
