#include <benchmark/benchmark.h>

#include "bessellab/kernels.hpp"

using namespace bessellab;

namespace {

KernelPoint next(KernelPoint p) {
  p.y = p.y > 10 ? 0.1 : p.y * 1.13;
  return p;
}

}  // namespace

static void BM_HeatKernel(benchmark::State& state) {
  const LambdaParam lp(static_cast<double>(state.range(0)) / 10.0);
  KernelPoint p{0.3, 1.0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_kernel(lp, p));
    p = next(p);
  }
}
BENCHMARK(BM_HeatKernel)->Arg(0)->Arg(10)->Arg(23);

static void BM_HeatKernelSpectral(benchmark::State& state) {
  const LambdaParam lp(1.0);
  KernelPoint p{0.3, 1.0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_kernel_spectral(lp, p));
    p = next(p);
    if (!spectral_supported(p)) p.y = 0.1;
  }
}
BENCHMARK(BM_HeatKernelSpectral);

static void BM_PoissonKernelHyp(benchmark::State& state) {
  const LambdaParam lp(static_cast<double>(state.range(0)) / 10.0);
  KernelPoint p{0.3, 1.0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(poisson_kernel_hyp(lp, p));
    p = next(p);
  }
}
BENCHMARK(BM_PoissonKernelHyp)->Arg(5)->Arg(23);

static void BM_PoissonKernelSubord(benchmark::State& state) {
  const LambdaParam lp(2.3);
  KernelPoint p{0.3, 1.0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(poisson_kernel_subord(lp, p));
    p = next(p);
  }
}
BENCHMARK(BM_PoissonKernelSubord);
