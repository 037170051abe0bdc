#include <benchmark/benchmark.h>

#include <random>

#include "quadrics/homology.hpp"
#include "quadrics/qform.hpp"

using namespace quadrics;

namespace {

QForm random_form(std::mt19937_64& rng, int dim) {
  QForm q(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) {
      const long num = static_cast<long>(rng() % 129) - 64;
      q.set_entry(i, j, make_rational(num, 64));
    }
  return q;
}

}  // namespace

static void BM_char_poly(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const QForm q = random_form(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(q));
}
BENCHMARK(BM_char_poly)->Arg(3)->Arg(5)->Arg(8);

static void BM_inertia_descartes(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const QForm q = random_form(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inertia_descartes(q));
}
BENCHMARK(BM_inertia_descartes)->Arg(3)->Arg(5)->Arg(8);

static void BM_inertia_ldl(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const QForm q = random_form(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inertia_ldl(q));
}
BENCHMARK(BM_inertia_ldl)->Arg(3)->Arg(5)->Arg(8);

static void BM_betti_curated(benchmark::State& state) {
  const char* names[] = {"torus7", "rp2_6", "rp3_11"};
  const SimplicialComplex complex = curated_complex(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(betti_z2(complex));
}
BENCHMARK(BM_betti_curated)->Arg(0)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
