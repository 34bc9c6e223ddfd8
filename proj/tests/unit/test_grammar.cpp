#include <gtest/gtest.h>

#include <cmath>

#include "bessellab/data_function.hpp"
#include "bessellab/errors.hpp"
#include "bessellab/weight_spec.hpp"

using namespace bessellab;

TEST(WeightGrammar, ParsesAtomsAndRoundTrips) {
  const auto w = WeightSpec::parse(
      "piece [0,1): 2*y^0.5 ; piece [1,inf): exp(-0.5*y^2) * log^2(y+e) * (1+y)^-1");
  ASSERT_EQ(w.pieces().size(), 2u);
  EXPECT_DOUBLE_EQ(w.pieces()[0].c, 2.0);
  EXPECT_DOUBLE_EQ(w.pieces()[0].alpha, 0.5);
  EXPECT_DOUBLE_EQ(w.pieces()[1].A, -0.5);
  EXPECT_DOUBLE_EQ(w.pieces()[1].beta, 2.0);
  EXPECT_DOUBLE_EQ(w.pieces()[1].gamma, -1.0);
  EXPECT_EQ(WeightSpec::parse(w.to_string()).to_string(), w.to_string());

  EXPECT_NEAR(w(0.25), 1.0, 1e-15);
  const double y = 2.0;
  EXPECT_NEAR(w(y), std::exp(-2.0) * std::pow(std::log(y + std::exp(1.0)), 2) / 3.0, 1e-14);
  EXPECT_EQ(w.split_points(), std::vector<double>{1.0});
}

TEST(WeightGrammar, WhitespaceInsensitive) {
  EXPECT_EQ(WeightSpec::parse("piece[0,inf):1*y^2").to_string(),
            WeightSpec::parse("  piece [ 0 , inf ) :  1 * y ^ 2 ").to_string());
}

TEST(WeightGrammar, ErrorsCarryPositions) {
  try {
    WeightSpec::parse("piece [0,1): 1; piece [2,inf): 1");
    FAIL();
  } catch (const ParseError& e) {
    // offset of the "2" that leaves [1, 2) uncovered
    EXPECT_EQ(e.position(), 23u);
  }
  EXPECT_THROW(WeightSpec::parse("piece [0,1): 1"), ParseError);
  EXPECT_THROW(WeightSpec::parse("piece [0,inf): -1"), ParseError);
  EXPECT_THROW(WeightSpec::parse("piece [0,inf): exp(y^3)"), ParseError);
  EXPECT_THROW(WeightSpec::parse("piece [0,inf): 1 junk"), ParseError);
}

TEST(DataGrammar, CatalogEntries) {
  EXPECT_EQ(DataFunction::parse("gauss").to_string(), "bounded_smooth(gauss)");
  EXPECT_EQ(DataFunction::parse("bounded_smooth( ricker )").to_string(), "bounded_smooth(ricker)");
  const auto ind = DataFunction::parse("indicator(0.5, 2)");
  EXPECT_EQ(ind(1.0), 1.0);
  EXPECT_EQ(ind(2.0), 0.0);
  EXPECT_EQ(ind.split_points(), (std::vector<double>{0.5, 2.0}));
  EXPECT_FALSE(ind.continuous_at(0.5));

  const auto g = DataFunction::parse("gaussian_growth(1, 2)");
  EXPECT_NEAR(g.quadratic_growth(), 0.25, 1e-15);
  EXPECT_NEAR(g(3.0), 9.0 * std::exp(9.0 / 4.0), 1e-10);

  const auto p = DataFunction::parse("power(-0.5)");
  EXPECT_TRUE(p.singular_at_zero());
  EXPECT_EQ(p.sup_abs(), std::numeric_limits<double>::infinity());

  const auto r = DataFunction::parse("ricker");
  EXPECT_FALSE(r.nonnegative());
  EXPECT_EQ(r.sign(0.5), 1.0);
  EXPECT_EQ(r.sign(2.0), -1.0);
  EXPECT_EQ(r.log_abs(1.0), -std::numeric_limits<double>::infinity());
  EXPECT_NEAR(r(2.0), -3.0 * std::exp(-2.0), 1e-15);

  EXPECT_NEAR(DataFunction::parse("log_damped(2)")(1.0), 1.0 / std::pow(std::log(1.0 + std::exp(1.0)), 2), 1e-15);
}

TEST(DataGrammar, ErrorsCarryPositions) {
  try {
    DataFunction::parse("indicator(0, 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
  EXPECT_THROW(DataFunction::parse("cosine"), ParseError);
  EXPECT_THROW(DataFunction::parse("indicator(2, 1)"), ParseError);
  EXPECT_THROW(DataFunction::parse("power()"), ParseError);
}
