#pragma once

// Heat and Poisson kernels of the Bessel operator
//   Delta_lambda = -d^2/dx^2 - (2 lambda / x) d/dx   on (0, inf),
// self-adjoint in L^2(y^{2 lambda} dy).

#include <cstddef>

namespace bessellab {

class LambdaParam {
 public:
  // lambda > -1/2
  explicit LambdaParam(double lambda);

  double lambda() const noexcept { return lambda_; }
  // Bessel order lambda - 1/2.
  double nu() const noexcept { return lambda_ - 0.5; }

  // Throws DomainError unless lambda >= 0; the estimate checks need it.
  void require_nonnegative(const char* operation) const;

 private:
  double lambda_;
};

struct KernelPoint {
  double t = 1.0;
  double x = 1.0;
  double y = 1.0;

  // Throws DomainError unless t, x, y are positive and finite.
  void validate() const;
};

// Quadrature controls shared by the subordination and spectral routes.
struct SubordinationQuad {
  std::size_t nodes = 64;    // minimum number of integrand samples, >= 32
  double rel_tol = 1e-12;    // adaptive target
  double max_error = 1e-8;   // a posteriori relative error that triggers NumericalError
  double tail_mass = 1e-12;  // admissible mass beyond the truncation point
  std::size_t max_panels = 600;

  void validate() const;
};

// W_t(x, y). Evaluated as
//   (xy)^{1/2-lambda}/(2t) e^{-(x-y)^2/4t} [e^{-z} I_nu(z)],  z = xy/2t,
// so nothing overflows; underflows to 0 once (x-y)^2/4t passes ~745.
double heat_kernel(const LambdaParam& lp, const KernelPoint& pt);

// log W_t(x, y), finite wherever the kernel itself underflows.
double log_heat_kernel(const LambdaParam& lp, const KernelPoint& pt);

// W_t(x, y) from the eigenfunction expansion
//   int_0^inf e^{-z^2 t} phi_z(x) phi_z(y) z^{2 lambda} dz.
// Supported for t >= kSpectralMinTime and (x-y)^2/4t <= kSpectralMaxExponent;
// beyond that the oscillatory integral cancels by about e^{(x-y)^2/4t} and
// DomainError is thrown.
inline constexpr double kSpectralMinTime = 0.01;
inline constexpr double kSpectralMaxExponent = 12.0;
bool spectral_supported(const KernelPoint& pt);
double heat_kernel_spectral(const LambdaParam& lp, const KernelPoint& pt, const SubordinationQuad& quad = {});

// d/dt W_t(x, y) in closed form through W at lambda and lambda + 1.
double heat_kernel_dt(const LambdaParam& lp, const KernelPoint& pt);

// Two-regime model of W:
//   t^{-lambda-1/2} e^{-(x^2+y^2)/4t}          if xy <= 2t
//   (xy)^{-lambda} (2t)^{-1/2} e^{-(x-y)^2/4t}  otherwise.
double heat_regime_approx(const LambdaParam& lp, const KernelPoint& pt);
double log_heat_regime_approx(const LambdaParam& lp, const KernelPoint& pt);

// P_t(x, y) via the Gauss hypergeometric function.
double poisson_kernel_hyp(const LambdaParam& lp, const KernelPoint& pt);

// P_t(x, y) by subordination to the heat kernel,
//   P_t = (2/sqrt(pi)) int_0^inf e^{-r^2} W_{t^2/4r^2}(x, y) dr.
double poisson_kernel_subord(const LambdaParam& lp, const KernelPoint& pt, const SubordinationQuad& quad = {});

// P_t(x, y) [(x-y)^2 + t^2] (x^2+y^2+t^2)^lambda / t.
double poisson_bound_ratio(const LambdaParam& lp, const KernelPoint& pt);

// Eigenfunction phi_z(x) = (zx)^{1/2-lambda} J_{lambda-1/2}(zx).
double eigenfunction(const LambdaParam& lp, double z, double x);

// Relative residual of Delta_lambda phi_z = z^2 phi_z with five-point
// differences. h <= 0 selects min(x/8, 0.01/z).
double eigenfunction_residual(const LambdaParam& lp, double z, double x, double h = 0.0);

// Classical half-line comparison kernels.
double euclidean_heat(double t, double d);     // e^{-d^2/4t} / sqrt(pi t)
double euclidean_poisson(double t, double d);  // t / (pi (t^2 + d^2))

}  // namespace bessellab
