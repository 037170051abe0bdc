#include <benchmark/benchmark.h>

#include "quadrics/instance.hpp"
#include "quadrics/net3.hpp"
#include "quadrics/pencil2.hpp"
#include "quadrics/perturb.hpp"
#include "quadrics/variety_oracle.hpp"

using namespace quadrics;

namespace {

QuadricSystem pencil_fixture(int n) { return to_system(gen_instance(5, 2, n)); }

QuadricSystem band_net() {
  QForm off(2);
  off.set_entry(1, 0, Rational(1));
  return QuadricSystem(1, {QForm::diagonal({Rational(1), Rational(-1)}), off,
                           QForm::identity(2)});
}

}  // namespace

static void BM_circle_polynomial(benchmark::State& state) {
  const QuadricSystem sys = pencil_fixture(static_cast<int>(state.range(0)));
  const QForm p = QForm::identity(sys.n + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(circle_polynomial(sys, Rational(1, 64), p));
}
BENCHMARK(BM_circle_polynomial)->Arg(2)->Arg(4)->Arg(6);

static void BM_index_profile(benchmark::State& state) {
  const QuadricSystem sys = pencil_fixture(static_cast<int>(state.range(0)));
  const QForm p = QForm::identity(sys.n + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(index_profile(sys, Rational(1, 64), p));
}
BENCHMARK(BM_index_profile)->Arg(2)->Arg(4);

static void BM_sign_field(benchmark::State& state) {
  const QuadricSystem sys = band_net();
  const QForm p = QForm::identity(2);
  for (auto _ : state) {
    SphereMesh mesh = SphereMesh::at_level(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(evaluate_sign_field(sys, Rational(1, 16), p, mesh));
  }
}
BENCHMARK(BM_sign_field)->Arg(3)->Arg(4)->Arg(5);

static void BM_net_analysis(benchmark::State& state) {
  const QuadricSystem sys = band_net();
  const QForm p = QForm::identity(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze_net(sys, Rational(1, 16), p));
}
BENCHMARK(BM_net_analysis);

static void BM_oracle_conic(benchmark::State& state) {
  const QuadricSystem conic(
      2, {QForm::diagonal({Rational(1), Rational(1), Rational(-1)})});
  for (auto _ : state)
    benchmark::DoNotOptimize(approximate_variety(conic, 3));
}
BENCHMARK(BM_oracle_conic);

