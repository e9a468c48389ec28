#include <benchmark/benchmark.h>

#include "symcone/symcone.hpp"

using namespace symcone;

namespace {

Algebra sym_of(const benchmark::State& state) { return Algebra::sym(static_cast<int>(state.range(0))); }

void BM_Thompson(benchmark::State& state) {
  Rng rng(1);
  const Algebra alg = sym_of(state);
  const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(thompson_distance(a, b));
}
BENCHMARK(BM_Thompson)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Hilbert(benchmark::State& state) {
  Rng rng(2);
  const Algebra alg = sym_of(state);
  const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_distance(a, b));
}
BENCHMARK(BM_Hilbert)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SpinThompson(benchmark::State& state) {
  Rng rng(3);
  const Algebra alg = Algebra::spin(static_cast<int>(state.range(0)));
  const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(thompson_distance(a, b));
}
BENCHMARK(BM_SpinThompson)->Arg(3)->Arg(16);

void BM_Mean(benchmark::State& state) {
  Rng rng(4);
  const Algebra alg = sym_of(state);
  const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_mean(a, b));
}
BENCHMARK(BM_Mean)->Arg(4)->Arg(16);

void BM_ThompsonFactorization(benchmark::State& state) {
  Rng rng(5);
  const Algebra alg = sym_of(state);
  const ElementMap f = build_thompson_isometry(random_descriptor(alg, Metric::Thompson, rng));
  for (auto _ : state) benchmark::DoNotOptimize(factor_thompson_isometry(alg, f));
}
BENCHMARK(BM_ThompsonFactorization)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HilbertFactorization(benchmark::State& state) {
  Rng rng(6);
  const Algebra alg = sym_of(state);
  const RayMap f = build_hilbert_isometry(random_descriptor(alg, Metric::Hilbert, rng));
  for (auto _ : state) benchmark::DoNotOptimize(factor_hilbert_isometry(alg, f));
}
BENCHMARK(BM_HilbertFactorization)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
