#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bessellab/errors.hpp"
#include "bessellab/estimates.hpp"

using namespace bessellab;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec cube(double lo, double hi, std::size_t n) { return {log_axis(lo, hi, n), log_axis(lo, hi, n), log_axis(lo, hi, n)}; }

}  // namespace

TEST(Sweep, ReportsExtremesAndDrift) {
  const auto r = sweep_ratio(cube(0.5, 2, 5), [](double t, double x, double y) { return t * x * y; });
  EXPECT_NEAR(r.min_ratio, 0.125, 1e-15);
  EXPECT_NEAR(r.max_ratio, 8.0, 1e-14);
  EXPECT_TRUE(r.refined);
  EXPECT_NEAR(r.drift, 0.0, 1e-14);
  EXPECT_EQ(r.verdict, Verdict::Bounded);

  const auto bad = sweep_ratio(cube(0.5, 2, 3), [](double t, double, double) { return t > 1.5 ? INFINITY : 1.0; });
  EXPECT_EQ(bad.verdict, Verdict::Violated);

  SweepOptions tight;
  tight.drift_limit = 1e-6;
  // Narrow bump the coarse grid misses.
  const auto drifting =
      sweep_ratio(cube(0.5, 2, 3), [](double t, double, double) { return 1.0 + std::exp(-1e3 * std::pow(std::log(t) + 0.35, 2)); }, tight);
  EXPECT_EQ(drifting.verdict, Verdict::Violated);
}

TEST(PoissonBound, LambdaZeroBandIsExact) {
  const auto r = poisson_bound_sweep(LambdaParam(0), cube(0.05, 20, 12));
  EXPECT_EQ(r.verdict, Verdict::Bounded);
  EXPECT_GT(r.min_ratio, 1 / kPi - 1e-9);
  EXPECT_LT(r.max_ratio, 2 / kPi + 1e-9);
}

TEST(PoissonBound, LambdaOneWithinDocumentedLimits) {
  const auto r = poisson_bound_sweep(LambdaParam(1), cube(0.1, 10, 12));
  EXPECT_EQ(r.verdict, Verdict::Bounded);
  EXPECT_GT(r.min_ratio, 0.05);
  EXPECT_LT(r.max_ratio, 20.0);
}

TEST(Domination, Constants) {
  EXPECT_DOUBLE_EQ(domination_time_factor(2.0), 2.0);
  EXPECT_DOUBLE_EQ(domination_factor_time_factor(2.0), 8.0);
  EXPECT_THROW(domination_time_factor(1.0), DomainError);
  EXPECT_THROW(domination_time_factor(INFINITY), DomainError);
}

TEST(Domination, BoundedOnTheDocumentedGrids) {
  const GridSpec g{log_axis(0.01, 1, 10), log_axis(0.05, 10, 10), log_axis(0.05, 10, 10)};
  for (double lambda : {0.0, 1.0}) {
    EXPECT_EQ(heat_domination_check(LambdaParam(lambda), 2.0, g).verdict, Verdict::Bounded) << lambda;
    EXPECT_EQ(poisson_domination_check(LambdaParam(lambda), 2.0, g).verdict, Verdict::Bounded) << lambda;
  }
  EXPECT_LE(poisson_domination_check(LambdaParam(0), 2.0, g).max_ratio, 2.0);
}

TEST(Domination, JumpEdgeIsOneSided) {
  // At y = M max(x,1) the indicator term is still present; just beyond it only
  // the factor term remains. Both sides must stay finite.
  const LambdaParam lp(1);
  const double M = 2.0, x = 1.0, edge = M * x;
  for (double t : {0.01, 0.3}) {
    EXPECT_TRUE(std::isfinite(heat_domination_ratio(lp, M, t, x, edge)));
    EXPECT_TRUE(std::isfinite(heat_domination_ratio(lp, M, t, x, edge * (1 + 1e-12))));
    EXPECT_TRUE(std::isfinite(poisson_domination_ratio(lp, M, t, x, edge * (1 + 1e-12))));
  }
}

TEST(Domination, RequiresNonnegativeLambda) {
  EXPECT_THROW(heat_domination_check(LambdaParam(-0.25), 2.0, cube(0.1, 1, 2)), DomainError);
}
