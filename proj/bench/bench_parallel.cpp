// Serial reference kernels against their OpenMP counterparts: quotient BFS and
// the centraliser scan. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "mggs/examples.hpp"
#include "mggs/oracle.hpp"
#include "mggs/quotient.hpp"

using namespace mggs;

namespace {

MggsGroup bench_group(int which) { return which == 0 ? example1() : MggsGroup::full_space(3); }
unsigned bench_depth(int which) { return which == 0 ? 2 : 3; }

void BM_QuotientSerial(benchmark::State& state) {
  const auto g = bench_group(static_cast<int>(state.range(0)));
  const auto gens = standard_generators(g);
  std::size_t n = 0;
  for (auto _ : state) {
    auto q = enumerate_quotient_serial(g, gens, bench_depth(static_cast<int>(state.range(0))));
    n = q.size();
    benchmark::DoNotOptimize(q);
  }
  state.counters["elements"] = static_cast<double>(n);
  state.counters["threads"] = 1;
}

void BM_QuotientParallel(benchmark::State& state) {
  const auto g = bench_group(static_cast<int>(state.range(0)));
  const auto gens = standard_generators(g);
  std::size_t n = 0;
  for (auto _ : state) {
    auto q = enumerate_quotient(g, gens, bench_depth(static_cast<int>(state.range(0))));
    n = q.size();
    benchmark::DoNotOptimize(q);
  }
  state.counters["elements"] = static_cast<double>(n);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_CentralizerScan(benchmark::State& state) {
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto r = check_centralizer_normalizer_A(static_cast<unsigned>(state.range(0)), parallel);
    if (!r.passed) state.SkipWithError("scan found a mismatch");
    benchmark::DoNotOptimize(r);
  }
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}

}  // namespace

// 0: symmetric p=5 at depth 2 (5^6 elements); 1: full space p=3 at depth 3 (3^12)
BENCHMARK(BM_QuotientSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CentralizerScan)
    ->Args({2, 0})
    ->Args({2, 1})
    ->Args({3, 0})
    ->Args({3, 1})
    ->ArgNames({"depth", "parallel"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
