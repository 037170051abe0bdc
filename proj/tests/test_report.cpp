#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "quadrics/report.hpp"

using namespace quadrics;

namespace {

InstanceFile two_conic_instance() {
  InstanceFile f;
  f.n = 2;
  f.forms = {QForm::diagonal({Rational(1), Rational(1), Rational(-1)}),
             QForm::diagonal({Rational(1, 4), Rational(4), Rational(-1)})};
  return f;
}

InstanceFile band_instance() {
  InstanceFile f;
  f.n = 1;
  QForm off(2);
  off.set_entry(1, 0, Rational(1));
  f.forms = {QForm::diagonal({Rational(1), Rational(-1)}), off,
             QForm::identity(2)};
  return f;
}

const BoundRow* find_row(const std::vector<BoundRow>& rows, const std::string& label) {
  for (const auto& row : rows)
    if (row.label == label) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("instance JSON round-trips and validates") {
  InstanceFile f = two_conic_instance();
  f.seed = 42;
  f.epsilon = Rational(1, 16);
  const InstanceFile back = parse_instance_json(emit_instance_json(f));
  CHECK(back == f);

  // the documented shorthand: integers and "p/q" strings
  const InstanceFile parsed = parse_instance_json(
      R"({"n": 1, "forms": [[["1","1/2"],["1/2",-1]]]})");
  CHECK(parsed.forms[0].entry(0, 1) == Rational(1, 2));
  CHECK(parsed.forms[0].entry(1, 1) == -1);

  CHECK_THROWS_AS(parse_instance_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_instance_json(R"({"n": 1, "forms": [[["1","2"],["3","4"]]]})"),
      std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(
      parse_instance_json(R"({"n": 2, "forms": [[["1","0"],["0","1"]]]})"),
      std::invalid_argument);  // wrong dimension
  CHECK_THROWS_AS(
      parse_instance_json(R"({"n": 1, "forms": [[["1","1/0"],["1/0","1"]]]})"),
      std::invalid_argument);  // zero denominator
}

TEST_CASE("analyze_instance on the two-conic pencil") {
  ReportOptions options;
  options.with_oracle = true;
  const AnalysisReport rep = analyze_instance(two_conic_instance(), options);
  CHECK(rep.k == 2);
  CHECK(rep.certificate == "TransversalK2");
  CHECK(rep.mu == 2);
  CHECK(rep.nu == 1);
  REQUIRE(rep.instance_bound.has_value());
  CHECK(*rep.instance_bound == "4");
  REQUIRE(!rep.strata.empty());
  CHECK(rep.strata[0].r == 1);
  CHECK(rep.strata[0].betti == 6);
  REQUIRE(rep.strata.size() >= 2);
  CHECK(rep.strata[1].certified_empty);
  REQUIRE(rep.oracle.has_value());
  CHECK(rep.oracle->stable);
  CHECK(rep.oracle->total == 4);
  CHECK(rep.stabilized);

  const BoundRow* milnor = find_row(rep.closed_form_bounds, "milnor_projective");
  REQUIRE(milnor != nullptr);
  CHECK(milnor->exact == "12");
}

TEST_CASE("analyze_instance for k = 1 and k >= 4") {
  InstanceFile single;
  single.n = 3;
  single.forms = {QForm::identity(4)};
  const AnalysisReport rep1 = analyze_instance(single);
  CHECK(rep1.certificate == "GenericEps0");
  CHECK(*rep1.instance_bound == "4");

  InstanceFile many;
  many.n = 2;
  many.forms = std::vector<QForm>(5, QForm::identity(3));
  const AnalysisReport rep5 = analyze_instance(many);
  CHECK(rep5.certificate.empty());
  CHECK_FALSE(rep5.instance_bound.has_value());
  CHECK(rep5.notice.find("closed-form") != std::string::npos);
  CHECK(find_row(rep5.closed_form_bounds, "numerical") != nullptr);
}

TEST_CASE("report JSON round-trips exactly") {
  ReportOptions options;
  options.with_oracle = true;
  for (const InstanceFile& instance : {two_conic_instance(), band_instance()}) {
    const AnalysisReport rep = analyze_instance(instance, options);
    const std::string text = emit_report_json(rep);
    const AnalysisReport back = parse_report_json(text);
    CHECK(back == rep);
    CHECK(emit_report_json(back) == text);
  }
}

TEST_CASE("reports are deterministic up to timing") {
  ReportOptions options;
  options.seed = 3;
  AnalysisReport a = analyze_instance(two_conic_instance(), options);
  AnalysisReport b = analyze_instance(two_conic_instance(), options);
  a.timing_ms.clear();
  b.timing_ms.clear();
  CHECK(a == b);
}

TEST_CASE("bounds_table rows") {
  const auto rows23 = bounds_table(2, 3);
  const BoundRow* milnor = find_row(rows23, "milnor_projective");
  REQUIRE(milnor != nullptr);
  CHECK(milnor->exact == "54");
  const BoundRow* numerical = find_row(rows23, "numerical");
  REQUIRE(numerical != nullptr);
  CHECK(numerical->ceiling == "9");
  CHECK(numerical->exact == "129/16");
  const BoundRow* reference = find_row(rows23, "reference_max_complexity");
  REQUIRE(reference != nullptr);
  CHECK(reference->exact == "6");

  const auto rows1 = bounds_table(1, 7);
  CHECK(find_row(rows1, "numerical")->ceiling == "8");

  const auto rows4 = bounds_table(4, 10);
  const BoundRow* headline = find_row(rows4, "reference_headline");
  REQUIRE(headline != nullptr);
  CHECK(headline->exact == "16000");
  CHECK(find_row(rows4, "numerical") != nullptr);

  // serializations carry every row
  const std::string csv = bounds_table_csv(rows23);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(rows23.size()));
  CHECK(bounds_table_json(rows23).find("milnor_projective") != std::string::npos);
}

TEST_CASE("gen_instance is deterministic and analyzable") {
  const InstanceFile a = gen_instance(11, 2, 2);
  const InstanceFile b = gen_instance(11, 2, 2);
  CHECK(a == b);
  CHECK(emit_instance_json(a) == emit_instance_json(b));
  CHECK_FALSE(gen_instance(12, 2, 2) == a);
  // entries live in [-1, 1] with denominator dividing 64
  for (const auto& form : a.forms)
    for (int i = 0; i <= a.n; ++i)
      for (int j = 0; j <= a.n; ++j) {
        CHECK(abs(form.entry(i, j)) <= 1);
        CHECK(64 % form.entry(i, j).get_den().get_ui() == 0);
      }
  const AnalysisReport rep = analyze_instance(a);
  CHECK(rep.k == 2);
}

TEST_CASE("compare_run soundness columns") {
  const auto rows = compare_run(1, 12, 2, 2);
  REQUIRE(rows.size() == 12);
  int with_bound = 0;
  for (const auto& row : rows) {
    if (!row.instance_bound) continue;
    ++with_bound;
    CHECK(*row.instance_bound <= 4);  // 2n
    const long milnor = std::stol(row.milnor);
    CHECK(milnor >= *row.instance_bound);
    if (row.oracle_total) {
      CHECK(*row.oracle_total <= *row.instance_bound);
      CHECK(*row.slack_vs_oracle == *row.instance_bound - *row.oracle_total);
    }
  }
  CHECK(with_bound >= 10);
  const std::string csv = compare_csv(rows);
  CHECK(csv.find("seed,k,n,certificate") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
}

TEST_CASE("plot data export for a k = 3 analysis") {
  const AnalysisReport rep = analyze_instance(band_instance());
  REQUIRE(rep.certificate == "StableK3");
  const std::string csv = analysis_plot_csv(band_instance(), rep);
  CHECK(csv.find("type,id,label") == 0);
  CHECK(csv.find("segment,") != std::string::npos);
  CHECK(csv.find("region,") != std::string::npos);
}
