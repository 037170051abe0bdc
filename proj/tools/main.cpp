// Command-line front end: analyze / bounds / oracle / gen / compare.
//
// Exit codes: 0 success, 1 input error, 2 failed perturbation certificate,
// 3 oracle instability at the maximum resolution.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "quadrics/errors.hpp"
#include "quadrics/homology.hpp"
#include "quadrics/report.hpp"
#include "quadrics/variety_oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::optional<quadrics::Rational> parse_optional_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return quadrics::parse_rational(text);
}

int run(int argc, char** argv) {
  CLI::App app{"Certified Betti-number bounds for intersections of real quadrics"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze an instance file");
  std::string analyze_file;
  std::string analyze_epsilon, analyze_magnitude, analyze_tau, analyze_plot;
  std::uint64_t analyze_seed = 0;
  bool analyze_seed_set = false;
  bool analyze_oracle = false, analyze_eps0 = false;
  int analyze_resolution = -1;
  analyze->add_option("file", analyze_file, "instance JSON file")->required();
  analyze->add_option("--epsilon", analyze_epsilon, "fixed epsilon (rational)");
  analyze
      ->add_option_function<std::uint64_t>(
          "--seed",
          [&](std::uint64_t v) {
            analyze_seed = v;
            analyze_seed_set = true;
          },
          "seed for the randomized-p retries")
      ->type_name("UINT");
  analyze->add_option("--magnitude", analyze_magnitude,
                      "noise amplitude for randomized p (rational)");
  analyze->add_flag("--oracle", analyze_oracle, "run the homology oracle (n <= 3)");
  analyze->add_flag("--eps0", analyze_eps0,
                    "strict generic mode: analyze the unperturbed sphere");
  analyze->add_option("--resolution", analyze_resolution, "oracle base resolution");
  analyze->add_option("--tau", analyze_tau, "oracle sublevel threshold (rational)");
  analyze->add_option("--plot", analyze_plot, "write k=3 plot-data CSV here");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bound table for (k, n)");
  int bounds_k = 0, bounds_n = 0;
  std::string bounds_format = "json";
  bounds->add_option("k", bounds_k, "number of quadrics")->required();
  bounds->add_option("n", bounds_n, "ambient projective dimension")->required();
  bounds->add_option("--format", bounds_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Z/2 Betti numbers (instance or complex)");
  std::string oracle_file, oracle_tau;
  int oracle_resolution = -1;
  oracle->add_option("file", oracle_file, "instance JSON or complex text file")
      ->required();
  oracle->add_option("--resolution", oracle_resolution, "base resolution");
  oracle->add_option("--tau", oracle_tau, "sublevel threshold (rational)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::uint64_t gen_seed = 0;
  int gen_k = 0, gen_n = 0;
  std::string gen_out;
  gen->add_option("--seed", gen_seed, "seed")->required();
  gen->add_option("--k", gen_k, "number of quadrics")->required();
  gen->add_option("--n", gen_n, "ambient projective dimension")->required();
  gen->add_option("--out", gen_out, "output file")->required();

  // compare
  auto* compare = app.add_subcommand("compare", "bound-comparison batch (CSV)");
  std::string compare_seeds;
  int compare_k = 0, compare_n = 0;
  compare->add_option("--seeds", compare_seeds, "seed range A..B")->required();
  compare->add_option("--k", compare_k, "number of quadrics")->required();
  compare->add_option("--n", compare_n, "ambient projective dimension")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    const quadrics::InstanceFile instance =
        quadrics::parse_instance_json(read_file(analyze_file));
    quadrics::ReportOptions options;
    if (analyze_seed_set) options.seed = analyze_seed;
    options.epsilon = parse_optional_rational(analyze_epsilon);
    options.magnitude = parse_optional_rational(analyze_magnitude);
    options.eps0 = analyze_eps0;
    options.with_oracle = analyze_oracle;
    if (analyze_resolution >= 0) options.oracle_resolution = analyze_resolution;
    options.oracle_tau = parse_optional_rational(analyze_tau);
    const quadrics::AnalysisReport report =
        quadrics::analyze_instance(instance, options);
    std::cout << quadrics::emit_report_json(report);
    if (!analyze_plot.empty())
      write_file(analyze_plot, quadrics::analysis_plot_csv(instance, report));
    return report.certificate == "Failed" ? 2 : 0;
  }

  if (bounds->parsed()) {
    const auto rows = quadrics::bounds_table(bounds_k, bounds_n);
    std::cout << (bounds_format == "csv" ? quadrics::bounds_table_csv(rows)
                                         : quadrics::bounds_table_json(rows));
    return 0;
  }

  if (oracle->parsed()) {
    const std::string content = read_file(oracle_file);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
      const quadrics::InstanceFile instance = quadrics::parse_instance_json(content);
      const quadrics::QuadricSystem sys = quadrics::to_system(instance);
      const int resolution = oracle_resolution >= 0
                                 ? oracle_resolution
                                 : quadrics::default_oracle_resolution(sys.n);
      const quadrics::VarietyApprox approx = quadrics::approximate_variety(
          sys, resolution, parse_optional_rational(oracle_tau));
      std::cout << "{ \"betti\": [";
      for (std::size_t i = 0; i < approx.betti.b.size(); ++i)
        std::cout << (i ? ", " : "") << approx.betti.b[i];
      std::cout << "], \"total\": " << approx.betti.total
                << ", \"stable\": " << (approx.stable ? "true" : "false")
                << ", \"empty_certified\": "
                << (approx.empty_certified ? "true" : "false")
                << ", \"tau\": \"" << quadrics::to_string(approx.tau)
                << "\", \"resolution\": " << approx.resolution << " }\n";
      return approx.stable ? 0 : 3;
    }
    const quadrics::SimplicialComplex complex = quadrics::parse_complex_text(content);
    const quadrics::BettiVector betti = quadrics::betti_z2(complex);
    std::cout << "{ \"betti\": [";
    for (std::size_t i = 0; i < betti.b.size(); ++i)
      std::cout << (i ? ", " : "") << betti.b[i];
    std::cout << "], \"total\": " << betti.total << " }\n";
    return 0;
  }

  if (gen->parsed()) {
    const quadrics::InstanceFile instance =
        quadrics::gen_instance(gen_seed, gen_k, gen_n);
    write_file(gen_out, quadrics::emit_instance_json(instance));
    std::cout << "wrote " << gen_out << "\n";
    return 0;
  }

  if (compare->parsed()) {
    const auto sep = compare_seeds.find("..");
    if (sep == std::string::npos)
      throw std::invalid_argument("--seeds must look like A..B");
    const std::uint64_t lo = std::stoull(compare_seeds.substr(0, sep));
    const std::uint64_t hi = std::stoull(compare_seeds.substr(sep + 2));
    const auto rows = quadrics::compare_run(lo, hi, compare_k, compare_n);
    std::cout << quadrics::compare_csv(rows);
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
