#include <benchmark/benchmark.h>
#include <omp.h>

#include "wkern/generators.hpp"
#include "wkern/oracles.hpp"
#include "wkern/rng.hpp"

using namespace wkern;

namespace {

// Unreachable targets force a full search, so both versions do the same work.
WeightedHypergraph clique_input(std::uint32_t n) {
  CounterRng rng(derive_seed(1, n));
  WeightedHypergraph h = gen::hypergraph(rng, n, 2, 0.7, 1000);
  h.target = 1000 * n * n + 1;
  return h;
}

SubsetSumInstance subset_input(std::uint32_t n) {
  CounterRng rng(derive_seed(2, n));
  BigWeight max_item = BigWeight(1) << 60;
  return gen::subset_sum(rng, n, max_item, max_item * n + 1);
}

CspFormula csp_input(std::uint32_t n) {
  CounterRng rng(derive_seed(3, n));
  CspFormula f = gen::csp(rng, n, 3 * n, 3, 3, 1000);
  f.target = 1000 * 3 * n + 1;
  return f;
}

void record_threads(benchmark::State& state) {
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

static void BM_eewhc_serial(benchmark::State& state) {
  auto h = clique_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_eewhc_exact_serial(h).states_explored);
}
static void BM_eewhc_omp(benchmark::State& state) {
  auto h = clique_input(state.range(0));
  record_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_eewhc_exact(h).states_explored);
}
BENCHMARK(BM_eewhc_serial)->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eewhc_omp)->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);

static void BM_subset_serial(benchmark::State& state) {
  auto s = subset_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_subset_sum_enumerate_serial(s).yes);
}
static void BM_subset_omp(benchmark::State& state) {
  auto s = subset_input(state.range(0));
  record_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_subset_sum_enumerate(s).yes);
}
BENCHMARK(BM_subset_serial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subset_omp)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);

static void BM_csp_serial(benchmark::State& state) {
  auto f = csp_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_csp_serial(f, CspMode::exact).yes);
}
static void BM_csp_omp(benchmark::State& state) {
  auto f = csp_input(state.range(0));
  record_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_csp(f, CspMode::exact).yes);
}
BENCHMARK(BM_csp_serial)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_csp_omp)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
