#include <benchmark/benchmark.h>

#include "groth/grothendieck.hpp"
#include "groth/permutation.hpp"
#include "groth/polynomial.hpp"
#include "groth/tableau.hpp"

namespace {

using namespace groth;

void BM_longest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(groth_longest(n));
}
BENCHMARK(BM_longest)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_divided_difference(benchmark::State& state) {
  // One application on the dense top polynomial; the first and most expensive
  // step of any inductive run in that ring.
  const int n = static_cast<int>(state.range(0));
  const Polynomial top = groth_longest(n);
  for (auto _ : state) benchmark::DoNotOptimize(divided_difference(top, 1));
}
BENCHMARK(BM_divided_difference)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polynomial p = groth_longest(n);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_multiply)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_divided_pipeline(benchmark::State& state) {
  const Permutation w({3, 1, 2, 5, 4});
  for (auto _ : state) benchmark::DoNotOptimize(groth_divided(w));
}
BENCHMARK(BM_divided_pipeline)->Unit(benchmark::kMillisecond);

void BM_tableau_pipeline(benchmark::State& state) {
  const Permutation w({3, 1, 2, 5, 4});
  for (auto _ : state) benchmark::DoNotOptimize(tableau_formula(w));
}
BENCHMARK(BM_tableau_pipeline)->Unit(benchmark::kMillisecond);

void BM_enumerate(benchmark::State& state) {
  const SkewShape shape = skew_shape(Permutation({2, 4, 1, 5, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(count_svt(shape));
}
BENCHMARK(BM_enumerate);

void BM_verify(benchmark::State& state) {
  const Permutation w({3, 1, 2, 5, 4});
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(w));
}
BENCHMARK(BM_verify)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
