#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numbers>

#include "bessellab/errors.hpp"
#include "bessellab/grid.hpp"
#include "bessellab/parallel.hpp"
#include "bessellab/quadrature.hpp"
#include "bessellab/tail_analysis.hpp"

using namespace bessellab;
namespace q = bessellab::quad;

constexpr double kPi = std::numbers::pi;

TEST(GaussKronrod, ExactForPolynomials) {
  const auto r = q::gk21([](double x) { return std::pow(x, 20) - 3 * x * x; }, -1.0, 2.0);
  const double exact = (std::pow(2.0, 21) + 1.0) / 21.0 - 9.0;
  EXPECT_NEAR(r.value, exact, 1e-9 * std::abs(exact));
}

TEST(Quadrature, SemiInfiniteAndEndpointSingularities) {
  {
    const auto seg = q::half_line_segments({1.0}, true);
    const auto r = q::integrate([](double y) { return std::exp(-y * y); }, seg);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, std::sqrt(kPi) / 2.0, 1e-13);
  }
  {
    // int_0^1 y^{-1/2} dy = 2
    const q::Segment s{0.0, 1.0, q::MapKind::LogToZero};
    const auto r = q::integrate([](double y) { return 1.0 / std::sqrt(y); }, std::span(&s, 1));
    EXPECT_NEAR(r.value, 2.0, 1e-12);
  }
  {
    // int_1^inf y^{-2} dy = 1
    const q::Segment s{1.0, std::numeric_limits<double>::infinity(), q::MapKind::LogToInfinity};
    const auto r = q::integrate([](double y) { return 1.0 / (y * y); }, std::span(&s, 1));
    EXPECT_NEAR(r.value, 1.0, 1e-12);
  }
}

TEST(Quadrature, PlanReproducesTheAdaptiveResult) {
  const auto seg = q::half_line_segments({}, true);
  auto f = [](double y) { return y * std::exp(-y); };
  const auto r = q::integrate(f, seg);
  EXPECT_NEAR(r.plan.apply(f), r.value, 1e-15);
  EXPECT_GT(r.plan.size(), 0u);
}

TEST(Quadrature, LogDomainIntegralFarOutsideDoubleRange) {
  // int_0^inf exp(-y^2/2 + 1000) dy = sqrt(pi/2) e^1000
  const auto r = q::integrate_log([](double y) { return -0.5 * y * y + 1000.0; }, 0.0,
                                  std::numeric_limits<double>::infinity());
  EXPECT_NEAR(r.log_value, 1000.0 + 0.5 * std::log(kPi / 2.0), 1e-12);
  const auto zero = q::integrate_log([](double) { return -std::numeric_limits<double>::infinity(); }, 0.0, 1.0);
  EXPECT_EQ(zero.log_value, -std::numeric_limits<double>::infinity());
  EXPECT_THROW(q::integrate_log([](double) { return 0.0; }, 1.0, 1.0), DomainError);
}

TEST(Quadrature, BreakpointsCatchNarrowSupport) {
  const double lo = 3.0, hi = 3.0 + 1e-6;
  auto L = [&](double y) { return y >= lo && y < hi ? 0.0 : -std::numeric_limits<double>::infinity(); };
  const auto r = q::integrate_log(L, 0.0, std::numeric_limits<double>::infinity(), {}, {lo, hi});
  EXPECT_NEAR(std::exp(r.log_value), 1e-6, 1e-15);
}

TEST(TailAnalysis, ClassifiesFiniteAndDivergentIntegrals) {
  const auto finite = analyze_tail([](double y) { return -2.0 * std::log1p(y); }, default_radii());
  EXPECT_EQ(finite.status, TailStatus::Finite);
  EXPECT_NEAR(std::exp(finite.log_total), 1.0, 1e-8);

  const auto divergent = analyze_tail([](double y) { return -0.5 * std::log1p(y); }, default_radii());
  EXPECT_EQ(divergent.status, TailStatus::Divergent);
  EXPECT_NEAR(divergent.tail_slope, 0.5, 0.05);

  // 1/(y log^2 y) tail: finite but slowly convergent.
  const auto slow = analyze_tail(
      [](double y) { return y < 2.0 ? 0.0 : -std::log(y) - 2.0 * std::log(std::log(y)); }, default_radii(), {2.0});
  EXPECT_EQ(slow.status, TailStatus::Finite);
}

TEST(TailAnalysis, ScheduleValidation) {
  EXPECT_THROW(analyze_tail([](double) { return 0.0; }, {1, 2, 3}), DomainError);
  EXPECT_THROW(classify_partials({1, 2}, {0, 0}), DomainError);
}

TEST(Grid, AxesAndRefinement) {
  const Axis a = log_axis(0.1, 10.0, 3);
  const auto p = a.points();
  ASSERT_EQ(p.size(), 3u);
  EXPECT_DOUBLE_EQ(p[0], 0.1);
  EXPECT_NEAR(p[1], 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(p[2], 10.0);
  const auto r = a.refined().points();
  ASSERT_EQ(r.size(), 5u);
  EXPECT_NEAR(r[1], std::sqrt(0.1), 1e-15);
  EXPECT_EQ((GridSpec{a, a, log_axis(1, 1, 1)}.size()), 9u);
  EXPECT_THROW(log_axis(0.0, 1.0, 3).points(), DomainError);
}

TEST(Parallel, EveryIndexOnceAndLowestFailureRethrown) {
  std::vector<std::atomic<int>> hits(257);
  parallel_for(hits.size(), Exec{4}, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  try {
    parallel_for(100, Exec{4}, [](std::size_t i) {
      if (i == 17 || i == 63) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
  EXPECT_GE(resolve_threads(Exec{}), 1u);
}
