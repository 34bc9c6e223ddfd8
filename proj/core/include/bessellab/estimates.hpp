#pragma once

// Grid sweeps of kernel ratios: two-sided Poisson bound, regime model band,
// domination lemmas. Constants are never assumed; a sweep reports the
// observed extremes and how much they move under one grid refinement.

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bessellab/grid.hpp"
#include "bessellab/kernels.hpp"
#include "bessellab/parallel.hpp"

namespace bessellab {

enum class Verdict { Bounded, Violated };

std::string to_string(Verdict v);

struct EstimateReport {
  std::string grid;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::array<double, 3> argmin{};  // (t, x, y)
  std::array<double, 3> argmax{};
  // Extremes on the refined grid, when a refinement was run.
  bool refined = false;
  double refined_min = 0.0;
  double refined_max = 0.0;
  // max(|min change|/min, |max change|/max) between the two grids
  double drift = 0.0;
  double cap = std::numeric_limits<double>::infinity();
  double drift_limit = 0.05;
  Verdict verdict = Verdict::Violated;
};

using RatioFn = std::function<double(double t, double x, double y)>;

struct SweepOptions {
  bool refine = true;
  double cap = 1e12;
  double drift_limit = 0.05;
  // Upper bounds only: the minimum may reach 0 and does not enter the drift.
  bool one_sided = false;
  // Extra y points per (t, x), e.g. both sides of a jump of the ratio.
  std::function<std::vector<double>(double t, double x)> extra_y;
  // Extra x points inside the x range, e.g. kinks of the bound.
  std::vector<double> extra_x;
  Exec exec{};
};

// Ratio extremes over the grid (and its refinement). Non-finite ratios make
// the verdict Violated.
EstimateReport sweep_ratio(const GridSpec& grid, const RatioFn& ratio, const SweepOptions& options = {});

// Band of heat_kernel / heat_regime_approx.
EstimateReport heat_regime_band(const LambdaParam& lp, const GridSpec& grid, const SweepOptions& options = {});

// Band of poisson_bound_ratio.
EstimateReport poisson_bound_sweep(const LambdaParam& lp, const GridSpec& grid, const SweepOptions& options = {});

// Constants of the domination lemmas for M > 1:
//   C_M = M/(M-1) (time dilation of the Euclidean kernel),
//   c_M = (M/(M-1))^3 (time dilation of the integrability factor).
double domination_time_factor(double M);
double domination_factor_time_factor(double M);

// y^{2 lambda} W_t(x,y) divided by
//   min(x,1)^{-2 lambda} W^E_{C_M t}(x-y) 1{y <= M max(x,1)} y^{2 lambda}/(y+1)^lambda
//     + min(x,1)^{-lambda} phi_{c_M t}(y)
double heat_domination_ratio(const LambdaParam& lp, double M, double t, double x, double y);

// y^{2 lambda} P_t(x,y) divided by
//   min(x,1)^{-2 lambda} P^E_t(x-y) min(y,1)^{2 lambda} 1{y <= M max(x,1)} + t phi(y)
double poisson_domination_ratio(const LambdaParam& lp, double M, double t, double x, double y);

EstimateReport heat_domination_check(const LambdaParam& lp, double M, const GridSpec& grid,
                                     const SweepOptions& options = {});
EstimateReport poisson_domination_check(const LambdaParam& lp, double M, const GridSpec& grid,
                                        const SweepOptions& options = {});

}  // namespace bessellab
