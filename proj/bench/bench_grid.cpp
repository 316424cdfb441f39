// Serial reference vs OpenMP kernel for the grid sweep. Tables and section
// data are built once up front so both sides time only the per-pair work.

#include <benchmark/benchmark.h>

#include "pfgr/chern.hpp"
#include "pfgr/grid.hpp"

namespace {

pfgr::GridRequest sweep(int jobs) {
  pfgr::GridRequest r;
  r.n_min = 4;
  r.n_max = 12;
  r.k_min = 1;
  r.k_max = 10;
  r.jobs = jobs;
  return r;
}

void prewarm() {
  for (int n = 4; n <= 12; ++n) pfgr::standard_section_calculus(n);
}

void BM_GridSerial(benchmark::State& state) {
  prewarm();
  const auto req = sweep(1);
  for (auto _ : state) benchmark::DoNotOptimize(pfgr::run_grid_serial(req));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pfgr::grid_pairs(req).size()));
}
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GridOpenMP(benchmark::State& state) {
  prewarm();
  const auto req = sweep(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfgr::run_grid(req));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pfgr::grid_pairs(req).size()));
}
BENCHMARK(BM_GridOpenMP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

// Cold start: the Pieri/Giambelli table build dominates a first sweep.
void BM_TableBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pfgr::build_pieri_giambelli_table(n));
}
BENCHMARK(BM_TableBuild)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
