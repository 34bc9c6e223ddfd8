#include <benchmark/benchmark.h>

#include "bessellab/specfun.hpp"

using namespace bessellab::specfun;

static void BM_LogGamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(x));
    x = x > 50 ? 0.3 : x * 1.07;
  }
}
BENCHMARK(BM_LogGamma);

static void BM_BesselIScaled(benchmark::State& state) {
  const RealOrder nu(static_cast<double>(state.range(0)) / 10.0);
  double z = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i_scaled(nu, z));
    z = z > 500 ? 0.01 : z * 1.1;
  }
}
BENCHMARK(BM_BesselIScaled)->Arg(-5)->Arg(5)->Arg(18);

static void BM_Hyp2F1(benchmark::State& state) {
  const double lambda = static_cast<double>(state.range(0)) / 10.0;
  double z = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyp2f1({(lambda + 1) / 2, (lambda + 2) / 2, (2 * lambda + 1) / 2, z}));
    z = z > 0.999 ? 0.05 : z + 0.013;
  }
}
BENCHMARK(BM_Hyp2F1)->Arg(5)->Arg(23);
