#include "quadrics/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "json_util.hpp"
#include "quadrics/bounds.hpp"
#include "quadrics/strata.hpp"

namespace quadrics {

namespace {

using detail::Json;

long elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - since)
      .count();
}

BoundRow value_row(std::string label, const BoundValue& value,
                   std::map<std::string, std::string> params) {
  BoundRow row;
  row.label = std::move(label);
  row.exact = to_string(value.exact);
  row.ceiling = to_string(value.ceiling);
  row.params = std::move(params);
  return row;
}

BoundRow integer_row(std::string label, const Integer& value,
                     std::map<std::string, std::string> params) {
  BoundRow row;
  row.label = std::move(label);
  row.exact = to_string(value);
  row.ceiling = to_string(value);
  row.params = std::move(params);
  return row;
}

std::vector<StratumEntry> stratum_entries(const QuadricSystem& sys,
                                          const ScheduleResult& result) {
  std::vector<StratumEntry> entries;
  const int k = sys.k();
  const int sigma = sigma_k(k);
  for (int r = 1; r <= sigma + 1; ++r) {
    StratumEntry entry;
    entry.r = r;
    entry.codim = codim(r);
    entry.certified_empty = entry.codim >= k;
    if (entry.certified_empty) {
      entry.note = "empty: codimension >= k";
    } else if (k == 2 && r == 1 && result.pencil) {
      entry.betti = result.pencil->root_count;
      entry.count = result.pencil->root_count;
      entry.note = "points on the circle";
    } else if (k == 3 && r == 1 && result.net) {
      entry.betti = result.net->betti_sigma;
      entry.count = result.net->curve_components;
      entry.note = "closed curves on the sphere";
    }
    // The singular locus of the corank-r locus is the corank-(r+1) locus;
    // the scan for it reports at the next corank up.
    if (k == 3 && r == 2 && result.net) {
      entry.note += result.net->corank2_flags.empty()
                        ? "; no corank-2 evidence at mesh resolution"
                        : "; corank-2 flags present";
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

std::vector<BoundRow> bounds_table(int k, int n) {
  std::vector<BoundRow> rows;
  rows.push_back(integer_row("milnor_projective", milnor_projective(n, 2),
                             {{"n", std::to_string(n)}, {"d", "2"}}));
  rows.push_back(value_row("basu_s", basu_s(k, n),
                           {{"k", std::to_string(k)}, {"n", std::to_string(n)}}));
  {
    BoundRow barvinok;
    barvinok.label = "barvinok_symbolic";
    barvinok.params = {{"formula", barvinok_bound(k, 4)},
                       {"constant", "4"},
                       {"k", std::to_string(k)}};
    rows.push_back(std::move(barvinok));
  }
  const int sigma = sigma_k(k);
  for (int r = 1; r <= sigma; ++r) {
    const int d = n - r + 2;
    rows.push_back(value_row(
        "spherical_r" + std::to_string(r), spherical_bound(k, d),
        {{"k", std::to_string(k)}, {"d", std::to_string(d)},
         {"r", std::to_string(r)}}));
  }
  rows.push_back(value_row("numerical", numerical_bound(k, n),
                           {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                            {"sigma_k", std::to_string(sigma)}}));
  const ReferenceConstants rc = reference_constants();
  for (const auto& [ck_k, ck_value] : rc.ck) {
    if (ck_k == k) {
      BoundRow row;
      row.label = "reference_ck";
      row.exact = to_string(ck_value);
      row.params = {{"k", std::to_string(k)},
                    {"meaning", "leading coefficient of the maximal complexity"}};
      rows.push_back(std::move(row));
    }
  }
  if (k == 2)
    rows.push_back(integer_row("reference_max_complexity",
                               rc.max_complexity_two_quadrics(n),
                               {{"formula", "2n"}}));
  if (k == 3) {
    rows.push_back(integer_row("reference_refined", rc.refined_three_quadrics(n),
                               {{"formula", "n^2 + n"}}));
    BoundRow b0;
    b0.label = "reference_b0_window";
    b0.params = {{"lower", rc.b0_three_quadrics_lower},
                 {"upper", rc.b0_three_quadrics_upper}};
    rows.push_back(std::move(b0));
  }
  if (k == 4)
    rows.push_back(integer_row(
        "reference_headline", Integer(16) * Integer(n) * n * n,
        {{"formula", rc.four_quadrics_reported},
         {"note", "coarser than the exact evaluation in the numerical row"}}));
  return rows;
}

AnalysisReport analyze_instance(const InstanceFile& instance,
                                const ReportOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.instance = instance;
  const QuadricSystem sys = to_system(instance);
  rep.k = sys.k();
  rep.n = sys.n;
  rep.closed_form_bounds = bounds_table(rep.k, rep.n);

  const auto t_analysis = std::chrono::steady_clock::now();
  if (rep.k == 1) {
    const bool generic = sgn(determinant(sys.forms[0].to_matrix())) != 0;
    rep.certificate = to_string(CertKind::GenericEps0);
    rep.epsilon = "0";
    rep.attempts = 1;
    rep.instance_bound = to_string(Integer(rep.n + 1));
    rep.stabilized = true;
    StratumEntry entry;
    entry.r = 1;
    entry.codim = 1;
    entry.certified_empty = true;
    entry.note = "empty: codimension >= k";
    rep.strata.push_back(std::move(entry));
    rep.notice = generic ? "" : "q1 is degenerate; the n+1 bound still applies";
  } else if (rep.k == 2 || rep.k == 3) {
    AnalyzeOptions aopts;
    aopts.seed = options.seed ? *options.seed : instance.seed.value_or(0);
    aopts.epsilon = options.epsilon ? options.epsilon : instance.epsilon;
    aopts.p_override = instance.p_override;
    aopts.magnitude = options.magnitude;
    aopts.eps0 = options.eps0;
    aopts.net3 = options.net3;
    const ScheduleResult result = analyze_system(sys, aopts);
    rep.certificate = to_string(result.cert.kind);
    rep.failure_reason = result.cert.failure_reason;
    rep.attempts = result.cert.attempts;
    {
      InstanceFile p_file;
      p_file.n = rep.n;
      p_file.forms = {result.cert.p};
      rep.p_used = std::move(p_file);
    }
    if (result.cert.kind != CertKind::Failed) {
      rep.epsilon = to_string(result.cert.epsilon);
      rep.strata = stratum_entries(sys, result);
      if (result.pencil) {
        rep.mu = result.pencil->mu;
        rep.nu = result.pencil->nu;
        rep.labels = result.pencil->arc_labels;
        rep.instance_bound = to_string(result.pencil->bound);
        rep.stabilized = true;
      } else if (result.net) {
        rep.mu = result.net->mu;
        rep.nu = result.net->nu;
        for (const auto& region : result.net->regions)
          rep.labels.push_back(region.label);
        rep.instance_bound = to_string(result.net->bound);
        rep.stabilized = result.net->stabilized;
        rep.mesh_level = result.net->mesh_level;
      }
    }
  } else {
    rep.notice = "instance analysis covers k <= 3; closed-form bounds only";
  }
  rep.timing_ms["analysis"] = elapsed_ms(t_analysis);

  if (options.with_oracle && rep.n >= 1 && rep.n <= 3) {
    const auto t_oracle = std::chrono::steady_clock::now();
    const int resolution =
        options.oracle_resolution.value_or(default_oracle_resolution(rep.n));
    const VarietyApprox approx =
        approximate_variety(sys, resolution, options.oracle_tau);
    OracleEntry entry;
    entry.betti = approx.betti.b;
    entry.total = approx.betti.total;
    entry.stable = approx.stable;
    entry.empty_certified = approx.empty_certified;
    entry.tau = to_string(approx.tau);
    entry.resolution = approx.resolution;
    rep.oracle = std::move(entry);
    rep.timing_ms["oracle"] = elapsed_ms(t_oracle);
    if (rep.oracle->stable && rep.instance_bound) {
      const Integer bound(rep.instance_bound->c_str());
      if (Integer(rep.oracle->total) > bound)
        throw std::logic_error(
            "soundness violation: oracle Betti total exceeds the instance bound");
    }
  }
  rep.timing_ms["total"] = elapsed_ms(t0);
  return rep;
}

namespace {

Json stratum_to_json(const StratumEntry& e) {
  Json j;
  j["r"] = e.r;
  j["codim"] = e.codim;
  j["certified_empty"] = e.certified_empty;
  if (e.betti) j["betti"] = *e.betti;
  if (e.count) j["count"] = *e.count;
  j["note"] = e.note;
  return j;
}

StratumEntry stratum_from_json(const Json& j) {
  StratumEntry e;
  e.r = j.at("r").get<int>();
  e.codim = j.at("codim").get<int>();
  e.certified_empty = j.at("certified_empty").get<bool>();
  if (j.contains("betti")) e.betti = j["betti"].get<int>();
  if (j.contains("count")) e.count = j["count"].get<int>();
  e.note = j.at("note").get<std::string>();
  return e;
}

Json bound_row_to_json(const BoundRow& row) {
  Json j;
  j["label"] = row.label;
  j["exact"] = row.exact;
  j["ceiling"] = row.ceiling;
  j["params"] = row.params;
  return j;
}

BoundRow bound_row_from_json(const Json& j) {
  BoundRow row;
  row.label = j.at("label").get<std::string>();
  row.exact = j.at("exact").get<std::string>();
  row.ceiling = j.at("ceiling").get<std::string>();
  row.params = j.at("params").get<std::map<std::string, std::string>>();
  return row;
}

}  // namespace

std::string emit_report_json(const AnalysisReport& report) {
  Json j;
  j["instance"] = detail::instance_to_json(report.instance);
  j["k"] = report.k;
  j["n"] = report.n;
  j["certificate"] = report.certificate;
  j["failure_reason"] = report.failure_reason;
  j["epsilon"] = report.epsilon;
  j["attempts"] = report.attempts;
  if (report.p_used) j["p_used"] = detail::instance_to_json(*report.p_used);
  Json strata = Json::array();
  for (const auto& s : report.strata) strata.push_back(stratum_to_json(s));
  j["strata"] = std::move(strata);
  if (report.mu) j["mu"] = *report.mu;
  if (report.nu) j["nu"] = *report.nu;
  j["labels"] = report.labels;
  if (report.instance_bound) j["instance_bound"] = *report.instance_bound;
  j["stabilized"] = report.stabilized;
  if (report.mesh_level) j["mesh_level"] = *report.mesh_level;
  Json bounds = Json::array();
  for (const auto& row : report.closed_form_bounds)
    bounds.push_back(bound_row_to_json(row));
  j["closed_form_bounds"] = std::move(bounds);
  if (report.oracle) {
    Json o;
    o["betti"] = report.oracle->betti;
    o["total"] = report.oracle->total;
    o["stable"] = report.oracle->stable;
    o["empty_certified"] = report.oracle->empty_certified;
    o["tau"] = report.oracle->tau;
    o["resolution"] = report.oracle->resolution;
    j["oracle"] = std::move(o);
  }
  j["notice"] = report.notice;
  j["timing_ms"] = report.timing_ms;
  return j.dump(2) + "\n";
}

AnalysisReport parse_report_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  AnalysisReport rep;
  rep.instance = detail::instance_from_json(j.at("instance"));
  rep.k = j.at("k").get<int>();
  rep.n = j.at("n").get<int>();
  rep.certificate = j.at("certificate").get<std::string>();
  rep.failure_reason = j.at("failure_reason").get<std::string>();
  rep.epsilon = j.at("epsilon").get<std::string>();
  rep.attempts = j.at("attempts").get<int>();
  if (j.contains("p_used")) rep.p_used = detail::instance_from_json(j["p_used"]);
  for (const auto& s : j.at("strata")) rep.strata.push_back(stratum_from_json(s));
  if (j.contains("mu")) rep.mu = j["mu"].get<int>();
  if (j.contains("nu")) rep.nu = j["nu"].get<int>();
  rep.labels = j.at("labels").get<std::vector<int>>();
  if (j.contains("instance_bound"))
    rep.instance_bound = j["instance_bound"].get<std::string>();
  rep.stabilized = j.at("stabilized").get<bool>();
  if (j.contains("mesh_level")) rep.mesh_level = j["mesh_level"].get<int>();
  for (const auto& row : j.at("closed_form_bounds"))
    rep.closed_form_bounds.push_back(bound_row_from_json(row));
  if (j.contains("oracle")) {
    OracleEntry o;
    o.betti = j["oracle"].at("betti").get<std::vector<long>>();
    o.total = j["oracle"].at("total").get<long>();
    o.stable = j["oracle"].at("stable").get<bool>();
    o.empty_certified = j["oracle"].at("empty_certified").get<bool>();
    o.tau = j["oracle"].at("tau").get<std::string>();
    o.resolution = j["oracle"].at("resolution").get<int>();
    rep.oracle = std::move(o);
  }
  rep.notice = j.at("notice").get<std::string>();
  rep.timing_ms = j.at("timing_ms").get<std::map<std::string, long>>();
  return rep;
}

std::string bounds_table_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "label,exact,ceiling,params\n";
  for (const auto& row : rows) {
    out << row.label << ',' << row.exact << ',' << row.ceiling << ",\"";
    bool first = true;
    for (const auto& [key, value] : row.params) {
      if (!first) out << "; ";
      out << key << '=' << value;
      first = false;
    }
    out << "\"\n";
  }
  return out.str();
}

std::string bounds_table_json(const std::vector<BoundRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) arr.push_back(bound_row_to_json(row));
  return arr.dump(2) + "\n";
}

std::vector<CompareRow> compare_run(std::uint64_t seed_lo, std::uint64_t seed_hi,
                                    int k, int n, const ReportOptions& options) {
  if (seed_hi < seed_lo)
    throw std::invalid_argument("compare_run: empty seed range");
  std::vector<CompareRow> rows;
  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    const InstanceFile instance = gen_instance(seed, k, n);
    ReportOptions opts = options;
    opts.with_oracle = n <= 3;
    const AnalysisReport rep = analyze_instance(instance, opts);
    CompareRow row;
    row.seed = seed;
    row.k = k;
    row.n = n;
    row.certificate = rep.certificate;
    row.transversal = rep.certificate != to_string(CertKind::Failed) &&
                      !rep.certificate.empty();
    row.mu = rep.mu.value_or(0);
    row.nu = rep.nu.value_or(0);
    if (rep.instance_bound) row.instance_bound = std::stol(*rep.instance_bound);
    row.numerical_bound = to_string(numerical_bound(k, n).ceiling);
    row.milnor = to_string(milnor_projective(n, 2));
    row.basu_ceiling = to_string(basu_s(k, n).ceiling);
    if (rep.oracle) {
      row.oracle_stable = rep.oracle->stable;
      if (rep.oracle->stable) row.oracle_total = rep.oracle->total;
    }
    if (row.instance_bound) {
      row.slack_vs_numerical =
          std::stol(to_string(numerical_bound(k, n).ceiling)) - *row.instance_bound;
      if (row.oracle_total)
        row.slack_vs_oracle = *row.instance_bound - *row.oracle_total;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "seed,k,n,certificate,transversal,mu,nu,instance_bound,"
         "numerical_bound,milnor,basu_ceiling,oracle_total,oracle_stable,"
         "slack_vs_numerical,slack_vs_oracle\n";
  for (const auto& row : rows) {
    out << row.seed << ',' << row.k << ',' << row.n << ',' << row.certificate
        << ',' << (row.transversal ? 1 : 0) << ',' << row.mu << ',' << row.nu
        << ',';
    if (row.instance_bound) out << *row.instance_bound;
    out << ',' << row.numerical_bound << ',' << row.milnor << ','
        << row.basu_ceiling << ',';
    if (row.oracle_total) out << *row.oracle_total;
    out << ',' << (row.oracle_stable ? 1 : 0) << ',';
    if (row.slack_vs_numerical) out << *row.slack_vs_numerical;
    out << ',';
    if (row.slack_vs_oracle) out << *row.slack_vs_oracle;
    out << "\n";
  }
  return out.str();
}

std::string analysis_plot_csv(const InstanceFile& instance,
                              const AnalysisReport& report) {
  if (report.k != 3 || !report.mesh_level || report.certificate == "Failed")
    throw std::invalid_argument("plot data requires a completed k=3 analysis");
  const QuadricSystem sys = to_system(instance);
  const Rational eps = parse_rational(report.epsilon);
  if (!report.p_used || report.p_used->forms.empty())
    throw std::invalid_argument("plot data: missing p in report");
  const QForm p = report.p_used->forms[0];
  SphereMesh mesh = SphereMesh::at_level(*report.mesh_level);
  SignField field = evaluate_sign_field(sys, eps, p, mesh);
  const CurveGraph curve = trace_curve(mesh, field);
  const NetAnalysis analysis = region_labels(sys, eps, p, mesh, field, curve);
  return plot_data_csv(mesh, field, curve, analysis);
}

}  // namespace quadrics
