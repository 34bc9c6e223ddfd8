#include "bessellab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bessellab/errors.hpp"
#include "bessellab/quadrature.hpp"
#include "bessellab/specfun.hpp"

namespace bessellab {

namespace {

constexpr double kPi = std::numbers::pi;

// log of (xy)^{1/2-lambda} / (2t) e^{-(x-y)^2/4t}
double log_heat_envelope(double lambda, const KernelPoint& pt) {
  const double d = pt.x - pt.y;
  return (0.5 - lambda) * std::log(pt.x * pt.y) - std::log(2.0 * pt.t) - d * d / (4.0 * pt.t);
}

double heat_kernel_unchecked(double lambda, const KernelPoint& pt) {
  const double z = pt.x * pt.y / (2.0 * pt.t);
  const specfun::RealOrder order(lambda - 0.5);
  return std::exp(log_heat_envelope(lambda, pt) + specfun::log_bessel_i_scaled(order, z));
}

}  // namespace

LambdaParam::LambdaParam(double lambda) : lambda_(lambda) {
  if (!(lambda > -0.5) || !std::isfinite(lambda))
    throw DomainError("lambda must be finite and > -1/2, got " + std::to_string(lambda));
}

void LambdaParam::require_nonnegative(const char* operation) const {
  if (lambda_ < 0.0) throw DomainError(std::string(operation) + " requires lambda >= 0");
}

void KernelPoint::validate() const {
  for (double v : {t, x, y})
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("kernel point needs t, x, y > 0 and finite");
}

void SubordinationQuad::validate() const {
  if (nodes < 32) throw DomainError("quadrature needs at least 32 nodes");
  if (!(rel_tol > 0.0) || !(max_error > 0.0) || !(tail_mass > 0.0)) throw DomainError("tolerances must be positive");
}

double heat_kernel(const LambdaParam& lp, const KernelPoint& pt) {
  pt.validate();
  return heat_kernel_unchecked(lp.lambda(), pt);
}

double log_heat_kernel(const LambdaParam& lp, const KernelPoint& pt) {
  pt.validate();
  const double z = pt.x * pt.y / (2.0 * pt.t);
  return log_heat_envelope(lp.lambda(), pt) + specfun::log_bessel_i_scaled(specfun::RealOrder(lp.nu()), z);
}

double heat_kernel_dt(const LambdaParam& lp, const KernelPoint& pt) {
  pt.validate();
  const double lambda = lp.lambda();
  const double t = pt.t;
  const double z = pt.x * pt.y / (2.0 * t);
  const double d = pt.x - pt.y;
  // W^lambda = E Is_nu(z) and (xy)^2 W^{lambda+1} = E xy Is_{nu+1}(z), with
  // the common envelope E; then
  //   t dW/dt = E [(-(lambda+1/2) + (x-y)^2/4t) Is_nu + z (Is_nu - Is_{nu+1})].
  const double log_env = log_heat_envelope(lambda, pt);
  const double i0 = specfun::log_bessel_i_scaled(specfun::RealOrder(lambda - 0.5), z);
  const double i1 = specfun::log_bessel_i_scaled(specfun::RealOrder(lambda + 0.5), z);
  const double a = std::exp(log_env + i0);
  const double b = std::exp(log_env + i1);
  return ((-(lambda + 0.5) + d * d / (4.0 * t)) * a + z * (a - b)) / t;
}

double log_heat_regime_approx(const LambdaParam& lp, const KernelPoint& pt) {
  pt.validate();
  const double lambda = lp.lambda();
  const double xy = pt.x * pt.y;
  const double t = pt.t;
  if (xy <= 2.0 * t) return -(lambda + 0.5) * std::log(t) - (pt.x * pt.x + pt.y * pt.y) / (4.0 * t);
  const double d = pt.x - pt.y;
  return -lambda * std::log(xy) - 0.5 * std::log(2.0 * t) - d * d / (4.0 * t);
}

double heat_regime_approx(const LambdaParam& lp, const KernelPoint& pt) {
  return std::exp(log_heat_regime_approx(lp, pt));
}

double poisson_kernel_hyp(const LambdaParam& lp, const KernelPoint& pt) {
  pt.validate();
  const double lambda = lp.lambda();
  // Scale by the largest coordinate so S cannot overflow.
  const double m = std::max({pt.x, pt.y, pt.t});
  const double x = pt.x / m, y = pt.y / m, t = pt.t / m;
  const double s = x * x + y * y + t * t;
  const double ratio = 2.0 * x * y / s;
  const double w = ratio * ratio;
  const double dm = x - y, dp = x + y;
  // 1 - w = ((x-y)^2 + t^2)((x+y)^2 + t^2) / S^2, exact up to rounding.
  const double one_minus_w = ((dm * dm + t * t) / s) * ((dp * dp + t * t) / s);
  if (!(one_minus_w > 0.0)) throw NumericalError("hypergeometric argument reached 1", {{"w", w}});
  const double f = specfun::hyp2f1({0.5 * (lambda + 1.0), 0.5 * (lambda + 2.0), lambda + 0.5, w}, one_minus_w);
  const double log_pref = std::log(2.0 / std::sqrt(kPi)) + specfun::log_gamma(lambda + 1.0) -
                          specfun::log_gamma(lambda + 0.5) + std::log(pt.t) -
                          (lambda + 1.0) * (std::log(s) + 2.0 * std::log(m));
  return std::exp(log_pref) * f;
}

double poisson_kernel_subord(const LambdaParam& lp, const KernelPoint& pt, const SubordinationQuad& quad) {
  pt.validate();
  quad.validate();
  const double lambda = lp.lambda();
  const double t = pt.t;
  const double d = pt.x - pt.y;
  const double kappa = 1.0 + d * d / (t * t);

  // With u = t^2/(4 r^2) the integrand e^{-r^2} W_u decays like
  // exp(-kappa r^2) for large r and like r^{2 lambda + 1} near 0.
  const auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double u = t * t / (4.0 * r * r);
    return std::exp(-r * r) * heat_kernel_unchecked(lambda, {u, pt.x, pt.y});
  };

  double r_max = std::sqrt(45.0 / kappa);
  const double r_regime = t / std::sqrt(2.0 * pt.x * pt.y);
  const double r_peak = 1.0 / std::sqrt(kappa);

  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<double> breaks{r_peak, r_regime, 0.5 * r_peak, 2.0 * r_peak, 0.5 * r_regime, 2.0 * r_regime};
    const std::size_t min_panels = (quad.nodes + 20) / 21;
    for (std::size_t k = 1; k < min_panels; ++k) breaks.push_back(r_max * static_cast<double>(k) / min_panels);
    const auto segs = quad::interval_segments(0.0, r_max, breaks);

    quad::Options opts;
    opts.rel_tol = quad.rel_tol;
    opts.max_panels = quad.max_panels;
    const auto res = quad::integrate(integrand, segs, opts);
    const double value = 2.0 / std::sqrt(kPi) * res.value;
    const double rel_err = res.value > 0.0 ? res.error / res.value : 1.0;
    if (rel_err > quad.max_error) {
      throw NumericalError("subordination quadrature did not converge",
                           {{"t", t}, {"x", pt.x}, {"y", pt.y}, {"lambda", lambda}, {"rel_error", rel_err},
                            {"panels", static_cast<double>(res.panels)}});
    }
    // Mass beyond r_max, bounded by the Gaussian tail of the integrand.
    const double g_end = integrand(r_max);
    const double tail = g_end / (2.0 * kappa * r_max);
    if (tail <= quad.tail_mass * res.value) return value;
    r_max *= 1.5;
  }
  throw NumericalError("subordination truncation did not capture the integrand mass",
                       {{"t", t}, {"x", pt.x}, {"y", pt.y}, {"r_max", r_max}});
}

bool spectral_supported(const KernelPoint& pt) {
  const double d = pt.x - pt.y;
  return pt.t >= kSpectralMinTime && d * d / (4.0 * pt.t) <= kSpectralMaxExponent;
}

double heat_kernel_spectral(const LambdaParam& lp, const KernelPoint& pt, const SubordinationQuad& quad) {
  pt.validate();
  quad.validate();
  const double t = pt.t, x = pt.x, y = pt.y;
  const double d = x - y;
  if (t < kSpectralMinTime) throw DomainError("spectral route unsupported for t < 0.01");
  if (d * d / (4.0 * t) > kSpectralMaxExponent)
    throw DomainError("spectral route unsupported for (x-y)^2/4t > " + std::to_string(kSpectralMaxExponent));

  const double lambda = lp.lambda();
  const auto integrand = [&](double z) {
    if (z <= 0.0) return 0.0;
    return std::exp(-z * z * t + 2.0 * lambda * std::log(z)) * eigenfunction(lp, z, x) * eigenfunction(lp, z, y);
  };

  const double z_max = std::sqrt(60.0 / t);
  // One breakpoint per half period of the fastest oscillation cos((x+y)z).
  const double period = kPi / (x + y);
  std::size_t pieces = static_cast<std::size_t>(std::ceil(z_max / period));
  pieces = std::clamp<std::size_t>(pieces, (quad.nodes + 20) / 21, 20000);
  std::vector<double> breaks;
  for (std::size_t k = 1; k < pieces; ++k) breaks.push_back(z_max * static_cast<double>(k) / pieces);
  const auto segs = quad::interval_segments(0.0, z_max, breaks);

  quad::Options opts;
  opts.rel_tol = quad.rel_tol;
  opts.max_panels = std::max(quad.max_panels, 4 * segs.size());
  const auto res = quad::integrate(integrand, segs, opts);
  const double scale = heat_kernel_unchecked(lambda, pt);
  if (res.error > quad.max_error * std::max(std::abs(res.value), scale)) {
    throw NumericalError("spectral quadrature did not converge",
                         {{"t", t}, {"x", x}, {"y", y}, {"abs_error", res.error}});
  }
  return res.value;
}

double poisson_bound_ratio(const LambdaParam& lp, const KernelPoint& pt) {
  lp.require_nonnegative("poisson_bound_ratio");
  const double p = poisson_kernel_hyp(lp, pt);
  const double d = pt.x - pt.y;
  const double s = pt.x * pt.x + pt.y * pt.y + pt.t * pt.t;
  return p * (d * d + pt.t * pt.t) * std::exp(lp.lambda() * std::log(s)) / pt.t;
}

double eigenfunction(const LambdaParam& lp, double z, double x) {
  const double zx = z * x;
  const double nu = lp.nu();
  const double j = specfun::bessel_j(specfun::RealOrder(nu), zx);
  return std::exp(-nu * std::log(zx)) * j;
}

double eigenfunction_residual(const LambdaParam& lp, double z, double x, double h) {
  if (!(z > 0.0) || !(x > 0.0)) throw DomainError("eigenfunction_residual needs z, x > 0");
  if (h <= 0.0) h = std::min(0.125 * x, 1e-2 / z);
  if (!(2.0 * h < x)) throw DomainError("finite-difference step must satisfy 2h < x");
  const double f0 = eigenfunction(lp, z, x);
  const double fp1 = eigenfunction(lp, z, x + h), fm1 = eigenfunction(lp, z, x - h);
  const double fp2 = eigenfunction(lp, z, x + 2 * h), fm2 = eigenfunction(lp, z, x - 2 * h);
  const double d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  const double d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  const double residual = -d2 - 2.0 * lp.lambda() / x * d1 - z * z * f0;
  return std::abs(residual) / (z * z * std::abs(f0) + 1e-300);
}

double euclidean_heat(double t, double d) { return std::exp(-d * d / (4.0 * t)) / std::sqrt(kPi * t); }

double euclidean_poisson(double t, double d) { return t / (kPi * (t * t + d * d)); }

}  // namespace bessellab
