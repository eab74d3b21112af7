// Serial reference vs the OpenMP kernel on the same search boxes.
//
//   bench_search --benchmark_filter=a1

#include <benchmark/benchmark.h>

#include "quartet/search.hpp"

using namespace quartet;

namespace {

SearchConfig config(const benchmark::State& state, long a) {
  return {Rat(a), static_cast<long>(state.range(0)), true, static_cast<int>(state.range(1))};
}

void BM_reference_a1(benchmark::State& state) {
  const SearchConfig cfg = config(state, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_search_reference(cfg));
}

void BM_kernel_a1(benchmark::State& state) {
  const SearchConfig cfg = config(state, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_search(cfg));
}

void BM_kernel_exact_a1(benchmark::State& state) {
  const SearchConfig cfg = config(state, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_search(cfg, KeyWidth::Exact));
}

void BM_reference_a3(benchmark::State& state) {
  const SearchConfig cfg = config(state, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_search_reference(cfg));
}

void BM_kernel_a3(benchmark::State& state) {
  const SearchConfig cfg = config(state, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_search(cfg));
}

}  // namespace

BENCHMARK(BM_reference_a1)->Args({100, 1})->Args({200, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_a1)
    ->Args({100, 1})
    ->Args({200, 1})
    ->Args({200, 2})
    ->Args({200, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_kernel_exact_a1)->Args({200, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference_a3)->Args({300, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_a3)->Args({300, 1})->Args({300, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
