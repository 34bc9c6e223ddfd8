#pragma once

// Catalog of initial data f on (0, inf).
//
// Text form (whitespace-insensitive):
//   power(alpha)                       y^alpha
//   gaussian_growth(T, deg[, lam, eps]) y^deg e^{y^2/4T} for y > 1, y^{-2 lam - eps} for y <= 1
//   log_damped(beta)                   y / log^beta(y + e)
//   indicator(a, b)                    1 on [a, b)
//   bounded_smooth(tag) or bare tag    one, gauss, exp, sech, logistic, ricker

#include <string>
#include <string_view>
#include <vector>

namespace bessellab {

enum class DataKind { Power, GaussianGrowth, LogDamped, Indicator, BoundedSmooth };

enum class SmoothTag { One, Gauss, Exp, Sech, Logistic, Ricker };

class DataFunction {
 public:
  static DataFunction power(double alpha);
  static DataFunction gaussian_growth(double T, double degree, double lambda = 0.0, double eps = 0.25);
  static DataFunction log_damped(double beta);
  static DataFunction indicator(double a, double b);
  static DataFunction bounded_smooth(SmoothTag tag);
  // Throws ParseError with the offending position.
  static DataFunction parse(std::string_view text);

  DataKind kind() const noexcept { return kind_; }
  std::string to_string() const;

  double operator()(double y) const;
  // log |f(y)|, -inf where f vanishes
  double log_abs(double y) const;
  // -1, 0 or 1
  double sign(double y) const;

  // Points where f jumps.
  std::vector<double> split_points() const;
  bool continuous_at(double y) const;
  bool nonnegative() const;
  // sup |f|, +inf for unbounded data
  double sup_abs() const;
  // Coefficient g of the e^{g y^2} growth (0 when absent).
  double quadratic_growth() const;
  // f blows up at the origin.
  bool singular_at_zero() const;

 private:
  DataFunction(DataKind kind, std::vector<double> params, SmoothTag tag = SmoothTag::One)
      : kind_(kind), params_(std::move(params)), tag_(tag) {}

  DataKind kind_;
  std::vector<double> params_;
  SmoothTag tag_;
};

}  // namespace bessellab
