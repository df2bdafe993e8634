#include <benchmark/benchmark.h>

#include "kleinian/fock.hpp"
#include "kleinian/partitions.hpp"
#include "kleinian/patterns.hpp"
#include "kleinian/youngwalls.hpp"

using namespace kleinian;

static void BM_Partitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partitions_up_to(n));
}
BENCHMARK(BM_Partitions)->Arg(15)->Arg(20)->Arg(25);

static void BM_LittlewoodDecompose(benchmark::State& state) {
  const auto parts = partitions_up_to(14);
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(littlewood_decompose(p, 4));
}
BENCHMARK(BM_LittlewoodDecompose);

static void BM_FormulaZr(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formula_Zr(r, 14));
}
BENCHMARK(BM_FormulaZr)->DenseRange(1, 4);

static void BM_BruteForceZr(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_Zr(r, 14));
}
BENCHMARK(BM_BruteForceZr)->DenseRange(1, 4);

static void BM_EnumerateWalls(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_walls(4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateWalls)->Arg(10)->Arg(14);

static void BM_SubstitutionA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_substitution_A(6, {1, 2}, 10));
}
BENCHMARK(BM_SubstitutionA)->Unit(benchmark::kMillisecond);

static void BM_CommutatorReport(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commutator_report(r, 10, true));
}
BENCHMARK(BM_CommutatorReport)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
