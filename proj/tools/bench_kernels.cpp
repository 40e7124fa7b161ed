// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "unimod/decompose.hpp"
#include "unimod/linalg.hpp"
#include "unimod/toric.hpp"

using namespace unimod;
using namespace unimod::testing;

namespace {

template <bool Parallel>
void BM_MinorScan(benchmark::State& state) {
  const IncidenceMatrix a{complete_graph(static_cast<std::size_t>(state.range(0)))};
  ScanOptions opts;
  opts.sample_limit = 200000;
  for (auto _ : state) {
    const MinorReport r = Parallel ? minor_scan(a, opts) : minor_scan_serial(a, opts);
    benchmark::DoNotOptimize(r.minors_evaluated);
  }
}

template <bool Parallel>
void BM_KernelOracle(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? dumbbell() : two_triangles_two_paths();
  for (auto _ : state) {
    const BasisSet s = Parallel ? kernel_oracle_graver(g, 2) : kernel_oracle_graver_serial(g, 2);
    benchmark::DoNotOptimize(s.elements.size());
  }
}

template <bool Parallel>
void BM_InducedOddCycles(benchmark::State& state) {
  const Graph g = random_graph(1, static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) {
    const auto r = Parallel ? enumerate_induced_odd_cycles(g) : enumerate_induced_odd_cycles_serial(g);
    benchmark::DoNotOptimize(r.cycles.size());
  }
}

}  // namespace

BENCHMARK(BM_MinorScan<false>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorScan<true>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelOracle<false>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelOracle<true>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedOddCycles<false>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedOddCycles<true>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
