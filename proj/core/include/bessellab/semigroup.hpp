#pragma once

// Heat and Poisson semigroups of the Bessel operator applied to catalog
// data: integrability factors, admissibility, the integrals u(t, x), PDE
// residuals and convergence to the initial data.

#include <string>
#include <vector>

#include "bessellab/data_function.hpp"
#include "bessellab/estimates.hpp"
#include "bessellab/kernels.hpp"
#include "bessellab/parallel.hpp"
#include "bessellab/tail_analysis.hpp"

namespace bessellab {

// phi_t(y) = y^lambda (y/(y+1))^lambda e^{-y^2/4t}
double phi_heat(double lambda, double t, double y);
double log_phi_heat(double lambda, double t, double y);
// phi(y) = y^{2 lambda} / (y^2+1)^{lambda+1}
double phi_poisson(double lambda, double y);
double log_phi_poisson(double lambda, double y);

enum class Problem { Heat, Poisson };

std::string to_string(Problem p);

struct IntegrabilityFactor {
  Problem kind = Problem::Heat;
  double lambda = 0.0;
  double t = 1.0;  // heat only

  static IntegrabilityFactor heat(double lambda, double t);
  static IntegrabilityFactor poisson(double lambda);

  double operator()(double y) const;
  double log_value(double y) const;
};

// Ratio of the factor to its piecewise model
//   heat:    y^{2 lambda} e^{-y^2/4t} (y <= 1),  y^lambda e^{-y^2/4t} (y > 1)
//   poisson: y^{2 lambda} (y <= 1),              y^{-2} (y > 1)
// on y in [1e-4, 1e4]. The exact band is [2^{-lambda}, 1] for heat and
// [2^{-lambda-1}, 1] for poisson.
EstimateReport factor_behavior_check(const IntegrabilityFactor& factor);

struct AdmissibilityVerdict : TailVerdict {
  std::vector<double> partial_integrals() const;
};

// Convergence of int_0^inf phi(y) |f(y)| dy.
AdmissibilityVerdict admissibility(const DataFunction& f, const IntegrabilityFactor& factor,
                                   const std::vector<double>& radii = default_radii());

struct ApplyResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

// u(t, x) = int_0^inf K_t(x, y) f(y) y^{2 lambda} dy, with an a posteriori
// relative error below 1e-8 (NumericalError otherwise). Data whose integral
// does not converge raise DivergenceError.
ApplyResult heat_apply_result(const LambdaParam& lp, double t, double x, const DataFunction& f);
ApplyResult poisson_apply_result(const LambdaParam& lp, double t, double x, const DataFunction& f);
double heat_apply(const LambdaParam& lp, double t, double x, const DataFunction& f);
// Same integral restricted to y < upper.
ApplyResult heat_apply_truncated(const LambdaParam& lp, double t, double x, const DataFunction& f, double upper);
double poisson_apply(const LambdaParam& lp, double t, double x, const DataFunction& f);

// |u_t + Delta u| / (|u| + 1) and |u_tt - Delta u| / (|u| + 1) by central
// differences with step h (h <= 0 selects min(t, x) 1e-3). All stencil
// values reuse one quadrature layout.
double pde_residual_heat(const LambdaParam& lp, double t, double x, const DataFunction& f, double h = 0.0);
double pde_residual_poisson(const LambdaParam& lp, double t, double x, const DataFunction& f, double h = 0.0);

struct ConvergenceReport {
  Problem problem = Problem::Heat;
  std::vector<double> xs;
  std::vector<double> ts;
  // values[i][j] = u(ts[i], xs[j]); errors[i][j] = |values - f(xs[j])|
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> errors;
  std::vector<double> max_errors;  // per t
  bool monotone = false;           // max error nonincreasing over the last three steps
  double final_max_error = 0.0;
};

// Errors below this absolute level are treated as equal when checking
// monotonicity; they are quadrature noise.
inline constexpr double kConvergenceNoiseFloor = 1e-12;

ConvergenceReport convergence_experiment(const LambdaParam& lp, const DataFunction& f, const std::vector<double>& xs,
                                         const std::vector<double>& ts, Problem problem, const Exec& exec = {});

// |int W_t(x,z) W_s(z,y) z^{2 lambda} dz - W_{t+s}(x,y)| / W_{t+s}(x,y)
double chapman_kolmogorov_check(const LambdaParam& lp, double t, double s, double x, double y);

}  // namespace bessellab
