#include <benchmark/benchmark.h>

#include "mmexp/analysis.hpp"
#include "mmexp/builtins.hpp"
#include "mmexp/experiment.hpp"
#include "mmexp/kernel.hpp"
#include "mmexp/operators.hpp"

using namespace mmexp;

namespace {

const ActivationKind kKinds[] = {ActivationKind::logistic, ActivationKind::hyperbolic_tangent, ActivationKind::ramp,
                                 ActivationKind::three_level};

// Whole-grid evaluation; range(0) picks the kernel, range(1) is n.
void BM_ApplyOnGrid(benchmark::State& state, OperatorKind op) {
  const auto f = f_piecewise_target(0.05, 2.0);
  const OperatorConfig cfg{make_kernel(kKinds[state.range(0)]), 0.05, 2.0, static_cast<int>(state.range(1))};
  const auto grid = uniform_grid(0.05, 2.0, 400);
  for (auto _ : state) benchmark::DoNotOptimize(apply_on_grid(f, cfg, grid, op));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK_CAPTURE(BM_ApplyOnGrid, gm, OperatorKind::gm)->ArgsProduct({{0, 2}, {10, 120}});
BENCHMARK_CAPTURE(BM_ApplyOnGrid, mk, OperatorKind::mk)->ArgsProduct({{0, 2}, {10, 120}});

void BM_CellMean(benchmark::State& state) {
  const auto f = f_piecewise_target(0.05, 2.0);
  const OperatorConfig cfg{make_kernel(ActivationKind::ramp), 0.05, 2.0, 120};
  const auto w = cfg.window();
  std::int64_t k = w.k_lo;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cell_mean(f, cfg, k));
    k = k == w.k_hi ? w.k_lo : k + 1;
  }
}
BENCHMARK(BM_CellMean);

void BM_Moment(benchmark::State& state) {
  const auto k = make_kernel(kKinds[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(moment(k, 1.0));
}
BENCHMARK(BM_Moment)->DenseRange(0, 3);

void BM_ErrorTable(benchmark::State& state) {
  Experiment exp;
  for (auto _ : state) benchmark::DoNotOptimize(run_error_table(exp));
}
BENCHMARK(BM_ErrorTable)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
