#pragma once

// Convergence diagnostics for integrals of nonnegative functions over
// (0, inf), based on partial integrals up to an increasing list of radii.

#include <functional>
#include <string>
#include <vector>

namespace bessellab {

enum class TailStatus { Finite, Divergent, Inconclusive };

std::string to_string(TailStatus status);

struct TailVerdict {
  TailStatus status = TailStatus::Inconclusive;
  std::vector<double> radii;
  // log of the partial integral up to each radius (may be -inf or +inf)
  std::vector<double> log_partials;
  // d log I / d log R fitted over the last four radii
  double tail_slope = 0.0;
  double fit_residual = 0.0;
  // log of the full integral when status is Finite, +inf otherwise
  double log_total = 0.0;
  // y exp(L(y)) fails to vanish as y -> 0: the integral diverges at the origin
  bool divergent_at_origin = false;
};

// Default schedule 10^0, 10^0.5, ..., 10^6.
std::vector<double> default_radii();

// Classification of a sequence of partial integrals.
//  finite:     last relative increment below 1e-10, or the last four
//              increments decrease geometrically (ratio <= 1/2) or like a
//              power of log R with exponent >= 1.5
//  divergent:  log-log slope above 0.05 with fit residual below 0.1, or
//              positive slopes that keep increasing
TailVerdict classify_partials(const std::vector<double>& radii, const std::vector<double>& log_partials);

// Partial integrals of exp(log_integrand) on (0, R_k], classified. When the
// verdict is Finite the tail beyond the last radius is added to log_total.
// Breakpoints mark jumps of the integrand.
TailVerdict analyze_tail(const std::function<double(double)>& log_integrand, const std::vector<double>& radii,
                         const std::vector<double>& breakpoints = {}, double rel_tol = 1e-12);

}  // namespace bessellab
