// Serial reference kernels vs their OpenMP counterparts.
//
//   ./build/bench/bench_kernels --benchmark_filter=Montecarlo
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include "genergy/ensemble.hpp"
#include "genergy/extremal.hpp"
#include "genergy/random.hpp"
#include "genergy/spectrum.hpp"

namespace {

using namespace genergy;

void BM_MontecarloSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(montecarlo_serial(n, 8, 1));
}

void BM_MontecarloParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(montecarlo(n, 8, 1));
}

void BM_ExhaustiveSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max_energy_serial(n));
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max_energy(n));
}

void BM_LocalSearchSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(local_search_max_energy_serial(n, 7, 2000));
}

void BM_LocalSearchParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(local_search_max_energy(n, 7, 2000));
}

void BM_JacobiEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = adjacency(sample_gnp_half(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigenvalues(a));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_MontecarloSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MontecarloParallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalSearchSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalSearchParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiEigenvalues)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

BENCHMARK_MAIN();
