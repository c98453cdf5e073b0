#include <benchmark/benchmark.h>

#include "altdesc/altpoly.hpp"
#include "altdesc/derivative_polys.hpp"
#include "altdesc/kernels.hpp"

using namespace altdesc;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_HistogramA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alt_descent_histogram_A(n, exec_of(state)));
  label(state);
}
BENCHMARK(BM_HistogramA)->ArgsProduct({{8, 9, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_HistogramsB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alt_descent_histograms_B(n, exec_of(state)));
  label(state);
}
BENCHMARK(BM_HistogramsB)->ArgsProduct({{6, 7, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ProfileHistogram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile_histogram(n, BoundaryConvention::closed_high, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ProfileHistogram)->ArgsProduct({{8, 9, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_DescentSetCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(descent_set_counts_B_minus(n, exec_of(state)));
  label(state);
}
BENCHMARK(BM_DescentSetCounts)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

// The formula routes for scale: no enumeration at all.
void BM_BHatViaQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(b_hat_via_q(n));
}
BENCHMARK(BM_BHatViaQ)->Arg(20)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_BHatMinusDescentSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(b_hat_minus_via_descent_sets(n));
}
BENCHMARK(BM_BHatMinusDescentSets)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
