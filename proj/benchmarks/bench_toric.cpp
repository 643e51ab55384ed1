#include <benchmark/benchmark.h>

#include "toric/cremona.hpp"
#include "toric/domains.hpp"
#include "toric/filtered.hpp"
#include "toric/obstructions.hpp"
#include "toric/random_complex.hpp"
#include "toric/torus_map.hpp"
#include "toric/weights.hpp"

using namespace toric;

static void BM_ConcaveWeights(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(concave_weights(4, 5, 1, 2));
}
BENCHMARK(BM_ConcaveWeights);

static void BM_PackEqualBalls(benchmark::State& state) {
  WeightSeq w(std::vector<Rational>(state.range(0), Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(packs(w, Rational(17, 6)));
}
BENCHMARK(BM_PackEqualBalls)->Arg(8)->Arg(32)->Arg(128);

static void BM_PolydiskVerdict(benchmark::State& state) {
  auto region = ToricRegion::rectangle(1, Rational(9, 5));
  for (auto _ : state) benchmark::DoNotOptimize(knotted_verdict(region));
}
BENCHMARK(BM_PolydiskVerdict);

static void BM_DerivedComplex(benchmark::State& state) {
  RandomComplexOptions opt;
  opt.max_generators = static_cast<std::size_t>(state.range(0));
  auto c = random_filtered_complex(1, 0, opt);
  for (auto _ : state) benchmark::DoNotOptimize(derived_complex(c));
}
BENCHMARK(BM_DerivedComplex)->Arg(8)->Arg(15)->Arg(40);

static void BM_PhiClosed(benchmark::State& state) {
  const torus::C2Point p{{0.5, 0.2}, {0.3, -1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(torus::phi_closed(p));
}
BENCHMARK(BM_PhiClosed);

static void BM_PhiFlow(benchmark::State& state) {
  const torus::C2Point p{{0.5, 0.2}, {0.3, -1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(torus::phi_flow(p));
}
BENCHMARK(BM_PhiFlow);
BENCHMARK_MAIN();
