#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "quadrics/homology.hpp"
#include "quadrics/instance.hpp"
#include "quadrics/report.hpp"

// Exercises the installed command-line surface end to end: subcommands,
// file formats and the documented exit codes.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(QUADRICS_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string two_conic_json() {
  quadrics::InstanceFile f;
  f.n = 2;
  f.forms = {quadrics::QForm::diagonal(
                 {quadrics::Rational(1), quadrics::Rational(1), quadrics::Rational(-1)}),
             quadrics::QForm::diagonal({quadrics::Rational(1, 4), quadrics::Rational(4),
                                        quadrics::Rational(-1)})};
  return quadrics::emit_instance_json(f);
}

}  // namespace

TEST_CASE("analyze: success, report content and exit code") {
  const auto path = temp_file("cli_two_conics.json", two_conic_json());
  const RunResult result = run_cli("analyze " + path.string() + " --oracle");
  CHECK(result.exit_code == 0);
  const quadrics::AnalysisReport report = quadrics::parse_report_json(result.output);
  CHECK(report.certificate == "TransversalK2");
  CHECK(report.instance_bound == "4");
  REQUIRE(report.oracle.has_value());
  CHECK(report.oracle->total == 4);
}

TEST_CASE("analyze: malformed input exits 1") {
  const auto path = temp_file("cli_bad.json", "{ definitely not json");
  const RunResult result = run_cli("analyze " + path.string());
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("input error") != std::string::npos);
}

TEST_CASE("analyze: missing file exits 1") {
  const RunResult result = run_cli("analyze /nonexistent/file.json");
  CHECK(result.exit_code == 1);
}

TEST_CASE("analyze: failed certificate exits 2") {
  // eps0 mode on the axis pencil fails the genericity check
  quadrics::InstanceFile f;
  f.n = 1;
  f.forms = {quadrics::QForm::diagonal({quadrics::Rational(1), quadrics::Rational(0)}),
             quadrics::QForm::diagonal({quadrics::Rational(0), quadrics::Rational(1)})};
  const auto path = temp_file("cli_axis.json", quadrics::emit_instance_json(f));
  const RunResult result = run_cli("analyze " + path.string() + " --eps0");
  CHECK(result.exit_code == 2);
}

TEST_CASE("analyze: k = 5 falls back to closed-form bounds") {
  quadrics::InstanceFile f;
  f.n = 2;
  f.forms = std::vector<quadrics::QForm>(5, quadrics::QForm::identity(3));
  const auto path = temp_file("cli_k5.json", quadrics::emit_instance_json(f));
  const RunResult result = run_cli("analyze " + path.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("closed-form") != std::string::npos);
}

TEST_CASE("bounds: csv and json formats") {
  const RunResult csv = run_cli("bounds 2 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("label,exact,ceiling,params") == 0);
  CHECK(csv.output.find("milnor_projective,54") != std::string::npos);
  const RunResult json = run_cli("bounds 4 10");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("reference_headline") != std::string::npos);
}

TEST_CASE("oracle: complex text file") {
  const auto path = temp_file("cli_rp2.txt",
                              quadrics::to_text(quadrics::curated_complex("rp2_6")));
  const RunResult result = run_cli("oracle " + path.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"betti\": [1, 1, 1]") != std::string::npos);
}

TEST_CASE("oracle: instance file") {
  quadrics::InstanceFile conic;
  conic.n = 2;
  conic.forms = {quadrics::QForm::diagonal(
      {quadrics::Rational(1), quadrics::Rational(1), quadrics::Rational(-1)})};
  const auto path = temp_file("cli_conic.json", quadrics::emit_instance_json(conic));
  const RunResult result = run_cli("oracle " + path.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"total\": 2") != std::string::npos);
  CHECK(result.output.find("\"stable\": true") != std::string::npos);
}

TEST_CASE("oracle: instability exits 3") {
  // {x0^2, x0 x1} in the projective line: the zero set is a single point,
  // but two forms on one dimension are expected to have empty locus, so the
  // calibrated oracle flags the run unstable rather than certifying it.
  quadrics::InstanceFile f;
  f.n = 1;
  quadrics::QForm sq(2), mixed(2);
  sq.set_entry(0, 0, quadrics::Rational(1));
  mixed.set_entry(1, 0, quadrics::Rational(1, 2));
  f.forms = {sq, mixed};
  const auto path = temp_file("cli_unstable.json", quadrics::emit_instance_json(f));
  const RunResult result = run_cli("oracle " + path.string());
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("\"stable\": false") != std::string::npos);
}

TEST_CASE("gen then analyze round-trip") {
  const auto out = std::filesystem::temp_directory_path() / "cli_gen.json";
  const RunResult gen = run_cli("gen --seed 7 --k 2 --n 2 --out " + out.string());
  CHECK(gen.exit_code == 0);
  const RunResult gen_again =
      run_cli("gen --seed 7 --k 2 --n 2 --out " + out.string() + ".b");
  CHECK(gen_again.exit_code == 0);
  std::ifstream a(out), b(out.string() + ".b");
  const std::string file_a((std::istreambuf_iterator<char>(a)),
                           std::istreambuf_iterator<char>());
  const std::string file_b((std::istreambuf_iterator<char>(b)),
                           std::istreambuf_iterator<char>());
  CHECK(file_a == file_b);
  const RunResult analyzed = run_cli("analyze " + out.string());
  CHECK((analyzed.exit_code == 0 || analyzed.exit_code == 2));
  CHECK(analyzed.output.find("\"certificate\"") != std::string::npos);
}

TEST_CASE("compare: CSV batch in seed order") {
  const RunResult result = run_cli("compare --seeds 1..3 --k 2 --n 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("seed,k,n,certificate") == 0);
  CHECK(result.output.find("\n1,2,1,") != std::string::npos);
  CHECK(result.output.find("\n3,2,1,") != std::string::npos);
}

TEST_CASE("plot export writes segment rows") {
  quadrics::InstanceFile f;
  f.n = 1;
  quadrics::QForm off(2);
  off.set_entry(1, 0, quadrics::Rational(1));
  f.forms = {quadrics::QForm::diagonal({quadrics::Rational(1), quadrics::Rational(-1)}),
             off, quadrics::QForm::identity(2)};
  const auto path = temp_file("cli_band.json", quadrics::emit_instance_json(f));
  const auto plot = std::filesystem::temp_directory_path() / "cli_band_plot.csv";
  const RunResult result =
      run_cli("analyze " + path.string() + " --plot " + plot.string());
  CHECK(result.exit_code == 0);
  std::ifstream in(plot);
  const std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  CHECK(content.find("segment,") != std::string::npos);
  CHECK(content.find("region,") != std::string::npos);
}
