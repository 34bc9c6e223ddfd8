#include <benchmark/benchmark.h>

#include "bessellab/maximal.hpp"
#include "bessellab/semigroup.hpp"

using namespace bessellab;

static void BM_HeatApply(benchmark::State& state) {
  const LambdaParam lp(1.0);
  const auto f = DataFunction::bounded_smooth(SmoothTag::Sech);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_apply(lp, 0.2, x, f));
    x = x > 5 ? 0.1 : x * 1.2;
  }
}
BENCHMARK(BM_HeatApply);

static void BM_PoissonApply(benchmark::State& state) {
  const LambdaParam lp(1.0);
  const auto f = DataFunction::bounded_smooth(SmoothTag::Sech);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(poisson_apply(lp, 0.2, x, f));
    x = x > 5 ? 0.1 : x * 1.2;
  }
}
BENCHMARK(BM_PoissonApply);

static void BM_HeatMaximal(benchmark::State& state) {
  const LambdaParam lp(0.5);
  const auto f = DataFunction::indicator(0.5, 2.0);
  MaximalConfig cfg;
  cfg.t_nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(heat_maximal(lp, f, cfg, 1.0));
}
BENCHMARK(BM_HeatMaximal)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
