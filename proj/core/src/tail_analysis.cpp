#include "bessellab/tail_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bessellab/errors.hpp"
#include "bessellab/quadrature.hpp"

namespace bessellab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

// log(exp(a) - exp(b)) for a >= b.
double log_sub(double a, double b) {
  if (b == -kInf) return a;
  if (b >= a) return -kInf;
  return a + std::log1p(-std::exp(b - a));
}

struct LineFit {
  double slope = 0.0;
  double residual = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (my + fit.slope * (x[i] - mx));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

// y exp(L(y)) sampled toward zero must eventually decrease.
bool integrable_at_origin(const std::function<double(double)>& log_integrand, double r0) {
  std::vector<double> s;
  for (int k = 4; k <= 40; k += 4) {
    const double y = r0 * std::ldexp(1.0, -k);
    s.push_back(std::log(y) + log_integrand(y));
  }
  const std::size_t n = s.size();
  // Decreasing over the last samples and well below the start.
  if (s[n - 1] == -kInf) return true;
  return s[n - 1] < s[n - 2] && s[n - 2] < s[n - 3] && s[n - 1] < s[0] - 1.0;
}

}  // namespace

std::string to_string(TailStatus status) {
  switch (status) {
    case TailStatus::Finite: return "finite";
    case TailStatus::Divergent: return "divergent";
    case TailStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> default_radii() {
  std::vector<double> r;
  for (int k = 0; k <= 12; ++k) r.push_back(std::pow(10.0, 0.5 * k));
  return r;
}

TailVerdict classify_partials(const std::vector<double>& radii, const std::vector<double>& log_partials) {
  if (radii.size() != log_partials.size() || radii.size() < 5)
    throw DomainError("need at least five radii with matching partial integrals");
  TailVerdict v;
  v.radii = radii;
  v.log_partials = log_partials;
  v.log_total = kInf;
  const std::size_t n = radii.size();

  if (std::any_of(log_partials.begin(), log_partials.end(), [](double l) { return l == kInf || std::isnan(l); })) {
    v.status = TailStatus::Divergent;
    v.tail_slope = kInf;
    return v;
  }
  const double last = log_partials[n - 1];
  if (last == -kInf) {
    v.status = TailStatus::Finite;
    v.log_total = -kInf;
    return v;
  }

  std::vector<double> log_inc(n);
  log_inc[0] = log_partials[0];
  for (std::size_t k = 1; k < n; ++k) log_inc[k] = log_sub(log_partials[k], log_partials[k - 1]);

  // Log-log slope of the partial integrals over the last four radii.
  std::vector<double> lx, ly;
  for (std::size_t k = n - 4; k < n; ++k) {
    if (log_partials[k] == -kInf) continue;
    lx.push_back(std::log(radii[k]));
    ly.push_back(log_partials[k]);
  }
  if (lx.size() >= 3) {
    const LineFit fit = fit_line(lx, ly);
    v.tail_slope = fit.slope;
    v.fit_residual = fit.residual;
  }

  if (log_inc[n - 1] - last < std::log(1e-10)) {
    v.status = TailStatus::Finite;
    v.log_total = last;
    return v;
  }

  bool decreasing = true;
  bool geometric = true;
  for (std::size_t k = n - 3; k < n; ++k) {
    if (!(log_inc[k] < log_inc[k - 1])) decreasing = false;
    if (!(log_inc[k] - log_inc[k - 1] <= std::log(0.5))) geometric = false;
  }
  if (decreasing) {
    bool summable = geometric;
    if (!summable && radii[n - 4] > std::exp(1.0)) {
      std::vector<double> llr, li;
      for (std::size_t k = n - 4; k < n; ++k) {
        llr.push_back(std::log(std::log(radii[k])));
        li.push_back(log_inc[k]);
      }
      summable = -fit_line(llr, li).slope >= 1.5;
    }
    if (summable) {
      v.status = TailStatus::Finite;
      v.log_total = last;
      return v;
    }
  }

  if (v.tail_slope > 0.05 && v.fit_residual < 0.1) {
    v.status = TailStatus::Divergent;
    return v;
  }
  bool accelerating = true;
  double prev = -kInf;
  for (std::size_t k = n - 4; k < n; ++k) {
    const double s = (log_partials[k] - log_partials[k - 1]) / std::log(radii[k] / radii[k - 1]);
    if (!(s > 0.05) || !(s > prev)) accelerating = false;
    prev = s;
  }
  v.status = accelerating ? TailStatus::Divergent : TailStatus::Inconclusive;
  return v;
}

TailVerdict analyze_tail(const std::function<double(double)>& log_integrand, const std::vector<double>& radii,
                         const std::vector<double>& breakpoints, double rel_tol) {
  if (radii.size() < 6) throw DomainError("truncation schedule needs at least six radii");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0) || !std::isfinite(radii[k]) || (k > 0 && !(radii[k] > radii[k - 1])))
      throw DomainError("truncation radii must be positive, finite and increasing");
  }
  if (radii.back() / radii.front() < 1e4 * (1.0 - 1e-12))
    throw DomainError("truncation schedule must span at least four decades");

  quad::Options opts;
  opts.rel_tol = rel_tol;
  opts.max_panels = 2000;

  if (!integrable_at_origin(log_integrand, radii.front())) {
    TailVerdict v;
    v.status = TailStatus::Divergent;
    v.radii = radii;
    v.log_partials.assign(radii.size(), kInf);
    v.tail_slope = kInf;
    v.log_total = kInf;
    v.divergent_at_origin = true;
    return v;
  }

  std::vector<double> partials;
  double acc = quad::integrate_log(log_integrand, 0.0, radii.front(), opts, breakpoints).log_value;
  partials.push_back(acc);
  for (std::size_t k = 1; k < radii.size(); ++k) {
    acc = log_add(acc, quad::integrate_log(log_integrand, radii[k - 1], radii[k], opts, breakpoints).log_value);
    partials.push_back(acc);
  }
  TailVerdict v = classify_partials(radii, partials);
  if (v.status == TailStatus::Finite && v.log_total != -kInf) {
    const auto tail = quad::integrate_log(log_integrand, radii.back(), kInf, opts, breakpoints);
    v.log_total = log_add(v.log_total, tail.log_value);
  }
  return v;
}

}  // namespace bessellab
