#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bessellab/errors.hpp"
#include "bessellab/weights.hpp"

using namespace bessellab;

namespace {

constexpr double kPi = std::numbers::pi;
const WeightSpec kOne = WeightSpec::constant();

}  // namespace

TEST(Exponent, Conjugates) {
  EXPECT_DOUBLE_EQ(LebesgueExponent(2).conjugate(), 2.0);
  EXPECT_DOUBLE_EQ(LebesgueExponent(4).conjugate(), 4.0 / 3.0);
  EXPECT_TRUE(std::isinf(LebesgueExponent(1).conjugate()));
  EXPECT_THROW(LebesgueExponent{0.5}, DomainError);
  EXPECT_THROW(LebesgueExponent{INFINITY}, DomainError);
}

TEST(Norms, ConstantWeightClosedForms) {
  const auto pn = dp_poisson_norm(kOne, 0.0, LebesgueExponent(2));
  ASSERT_EQ(pn.status, TailStatus::Finite);
  EXPECT_NEAR(pn.value, std::sqrt(kPi) / 2, 1e-8);
  const auto hn = dp_heat_norm(kOne, 0.0, LebesgueExponent(2), 1.0);
  ASSERT_EQ(hn.status, TailStatus::Finite);
  EXPECT_NEAR(hn.value, std::pow(kPi / 2, 0.25), 1e-8);
  // p = 1: sup of 1/(1+y^2)
  EXPECT_NEAR(dp_poisson_norm(kOne, 0.0, LebesgueExponent(1)).value, 1.0, 1e-8);
  EXPECT_NEAR(d_p_norm(kOne, LebesgueExponent(2)).value, std::sqrt(4.0 / 3.0), 1e-8);
}

TEST(Norms, LambdaOnePoisson) {
  // int y^4/(1+y^2)^4 dy = pi/32
  const auto n = dp_poisson_norm(kOne, 1.0, LebesgueExponent(2));
  EXPECT_NEAR(n.value, std::sqrt(kPi / 32), 1e-8);
}

TEST(Membership, GrowthSeparatesClasses) {
  const auto fast = WeightSpec::parse("piece [0,1): 1; piece [1,inf): 1*exp(-0.5*y^2)");
  EXPECT_EQ(membership(fast, 0.0, LebesgueExponent(2), Problem::Poisson).verdict, Membership::NonMember);
  EXPECT_EQ(membership(fast, 0.0, LebesgueExponent(2), Problem::Heat, 0.5).verdict, Membership::Member);
  EXPECT_EQ(membership(fast, 0.0, LebesgueExponent(2), Problem::Heat, 2.0).verdict, Membership::NonMember);
  EXPECT_EQ(membership(kOne, 1.0, LebesgueExponent(3), Problem::Poisson).verdict, Membership::Member);
}

TEST(Membership, CounterexampleShape) {
  const auto w = counterexample_weight(1.0, 2.0, 1.0, 0.25);
  EXPECT_NEAR(std::exp(w.log_value(0.5)), std::pow(0.5, 2.25), 1e-14);
  EXPECT_NEAR(std::exp(w.log_value(2.0)), std::exp(-2.0), 1e-14);
  EXPECT_THROW(counterexample_weight(0.0, 2.0, INFINITY, 0.25), DomainError);
}

TEST(Inclusion, StrictForDocumentedCases) {
  for (auto [lambda, p, T] : {std::tuple{0.0, 2.0, 1.0}, std::tuple{1.0, 1.5, 2.0}}) {
    const auto r = inclusion_demo(lambda, p, T);
    EXPECT_TRUE(r.inclusion_holds);
    EXPECT_EQ(r.counterexample.heat, Membership::Member);
    EXPECT_EQ(r.counterexample.poisson, Membership::NonMember);
    EXPECT_GT(r.counterexample_slope, 0.0);
    EXPECT_TRUE(r.strict);
  }
  EXPECT_THROW(inclusion_demo(0.0, 1.0, 1.0), DomainError);
}

TEST(Shells, ConstantWeight) {
  const double R = 2.0, s = 0.5;
  const auto sc = shell_constants(kOne, LebesgueExponent(2), R, s, 6);
  ASSERT_EQ(sc.size(), 7u);
  for (const auto& c : sc) {
    EXPECT_NEAR(c.V, std::sqrt(R * std::ldexp(1.0, c.k)), 1e-10 * c.V);
    EXPECT_NEAR(c.C, c.measure * c.V, 1e-10 * c.C);
  }
  EXPECT_DOUBLE_EQ(sc[0].measure, 1.0);
  EXPECT_DOUBLE_EQ(sc[3].shell_lo, 4.0);
  // p = 1: V_k = sup v^{-1} = 1
  for (const auto& c : shell_constants(kOne, LebesgueExponent(1), R, s, 4)) EXPECT_NEAR(c.V, 1.0, 1e-12);
}

TEST(Shells, SingularWeightDiverges) {
  EXPECT_THROW(shell_constants(WeightSpec::parse("piece [0,inf): 1*y^2"), LebesgueExponent(2), 2, 0.5, 4),
               DivergenceError);
  EXPECT_THROW(shell_constants(kOne, LebesgueExponent(2), 1.0, 0.5, 4), DomainError);
  EXPECT_THROW(shell_constants(kOne, LebesgueExponent(2), 2.0, 1.0, 4), DomainError);
}

TEST(Series, ExponentTruthTable) {
  struct Case {
    double sigma, gamma, p;
    bool expected;
  };
  const Case cases[] = {
      {0.5, 0.5, 2.0, true},  {0.5, 0.75, 2.0, false}, {0.5, 0.74, 2.0, true},  {0.9, 0.2, 1.0, false},
      {0.9, 0.19, 1.0, true}, {0.25, 1.0, 1.0, true},  {0.25, 0.94, 4.0, false}, {0.1, 0.1, 100.0, true},
  };
  for (const auto& c : cases) EXPECT_EQ(series_exponent_check(c.sigma, c.gamma, c.p), c.expected) << c.sigma << " " << c.gamma;
  EXPECT_THROW(series_exponent_check(1.0, 0.5, 2.0), DomainError);
  EXPECT_THROW(series_exponent_check(0.5, 0.0, 2.0), DomainError);
}
