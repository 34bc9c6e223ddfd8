#pragma once

// Special functions needed by the Bessel heat and Poisson kernels: the gamma
// function, the modified Bessel function I_nu (plain and exponentially
// scaled), the Bessel function J_nu and the Gauss hypergeometric function 2F1
// on [0, 1).
//
// Everything here is pure and reentrant.

namespace bessellab::specfun {

// Order of a Bessel function, nu > -1.
class RealOrder {
 public:
  explicit RealOrder(double nu);
  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

struct Hyp2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double z = 0.0;
};

// Gamma function for x > 0. Relative error below 1e-13 on (0, 170].
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Digamma psi(x) for real x that is not a nonpositive integer.
double digamma(double x);

// 1 / Gamma(x) for any real x (zero at the poles of Gamma).
double reciprocal_gamma(double x);

// Modified Bessel function of the first kind. Throws RangeError for z > 700.
double bessel_i(RealOrder order, double z);

// exp(-z) * I_nu(z); never overflows.
double bessel_i_scaled(RealOrder order, double z);

// log(exp(-z) I_nu(z)); stays finite where the scaled value underflows
// (large order, small argument).
double log_bessel_i_scaled(RealOrder order, double z);

// Bessel function of the first kind, absolute error below 1e-11 for z <= 100.
double bessel_j(RealOrder order, double z);

// 2F1(a, b; c; z) for 0 <= z < 1.
double hyp2f1(const Hyp2F1Params& params);

// Same as above with 1 - z supplied by the caller. Near z = 1 the
// complement is usually known far more accurately than 1 - z computed in
// floating point.
double hyp2f1(const Hyp2F1Params& params, double one_minus_z);

namespace detail {

// The two branches of bessel_i_scaled, exposed for the overlap tests.
double bessel_i_scaled_series(double nu, double z);
double bessel_i_scaled_asymptotic(double nu, double z);
// Crossover point between the branches.
double bessel_i_switch_point(double nu);

// Gamma for any real argument that is not a pole.
double gamma_any(double x);

}  // namespace detail

}  // namespace bessellab::specfun
