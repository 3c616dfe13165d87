#include <benchmark/benchmark.h>

#include "qfg/cut_scan.hpp"
#include "qfg/fgraph.hpp"

namespace {

qfg::FactGraph sample_graph(int n) {
  const qfg::DynkinA g(6);
  std::vector<qfg::KRFactor> fs;
  for (int k = 0; k < n; ++k) fs.push_back({1 + k % 5, 3 * k, 1 + k % 2, 0});
  return qfg::build_graph(qfg::q_factorize(qfg::DrinfeldPoly(g, fs)));
}

void BM_ScanSerial(benchmark::State& state) {
  const qfg::CutScanContext ctx(sample_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qfg::scan_cuts_serial(ctx));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << (state.range(0) - 1)) - 1));
}

void BM_ScanOmp(benchmark::State& state) {
  const qfg::CutScanContext ctx(sample_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qfg::scan_cuts_omp(ctx));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << (state.range(0) - 1)) - 1));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanOmp)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
