#include "bessellab/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bessellab/errors.hpp"
#include "bessellab/quadrature.hpp"

namespace bessellab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
}

double log_kernel(Problem problem, const LambdaParam& lp, double t, double x, double y) {
  if (problem == Problem::Heat) return log_heat_kernel(lp, {t, x, y});
  return std::log(poisson_kernel_hyp(lp, {t, x, y}));
}

// y K_t(x, y) f(y) y^{2 lambda} in logs, for the decay probes.
double log_weighted(Problem problem, const LambdaParam& lp, double t, double x, const DataFunction& f, double y) {
  const double lf = f.log_abs(y);
  if (lf == -kInf) return -kInf;
  return std::log(y) + log_kernel(problem, lp, t, x, y) + 2.0 * lp.lambda() * std::log(y) + lf;
}

struct Layout {
  std::vector<quad::Segment> segments;
};

Layout apply_layout(Problem problem, const LambdaParam& lp, double t, double x, const DataFunction& f) {
  std::vector<double> bp{x, 2.0 * t / x};
  const double width = problem == Problem::Heat ? 2.0 * std::sqrt(t) : t;
  for (double k : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    bp.push_back(x + k * width);
    bp.push_back(x - k * width);
  }
  if (problem == Problem::Poisson) {
    for (double k : {0.5, 2.0, 8.0, 64.0}) bp.push_back(k * x);
  }
  const double g = f.quadratic_growth();
  if (problem == Problem::Heat && g > 0.0) {
    // Peak of e^{-(y-x)^2/4t + g y^2}.
    const double a = 1.0 / (4.0 * t) - g;
    if (!(a > 0.0)) {
      throw DivergenceError("data grows too fast for the heat kernel at this time",
                            {{"t", t}, {"growth", g}, {"lambda", lp.lambda()}});
    }
    const double peak = x / (1.0 - 4.0 * g * t);
    const double sigma = 1.0 / std::sqrt(a);
    for (double k : {0.0, 1.0, 3.0, 6.0, 10.0}) {
      bp.push_back(peak + k * sigma);
      bp.push_back(peak - k * sigma);
    }
  }
  for (double s : f.split_points()) bp.push_back(s);
  return {quad::half_line_segments(bp, true)};
}

void probe_decay(Problem problem, const LambdaParam& lp, double t, double x, const DataFunction& f,
                 const Layout& layout) {
  // Toward infinity.
  const double start = layout.segments.back().a;
  std::vector<double> s;
  for (int k = 0; k <= 60; k += 4) s.push_back(log_weighted(problem, lp, t, x, f, start * std::ldexp(1.0, k)));
  const std::size_t n = s.size();
  const double peak = *std::max_element(s.begin(), s.end());
  const bool decays = s[n - 1] == -kInf ||
                      (s[n - 1] < s[n - 2] && s[n - 2] < s[n - 3] && s[n - 1] < peak - 2.0);
  if (!decays) {
    throw DivergenceError("semigroup integral does not converge at infinity",
                          {{"t", t}, {"x", x}, {"lambda", lp.lambda()}, {"log_tail", s[n - 1]}});
  }
  if (!f.singular_at_zero()) return;
  const double first = layout.segments.front().b;
  std::vector<double> z;
  for (int k = 4; k <= 40; k += 4) z.push_back(log_weighted(problem, lp, t, x, f, first * std::ldexp(1.0, -k)));
  const std::size_t m = z.size();
  if (!(z[m - 1] < z[m - 2] && z[m - 2] < z[m - 3] && z[m - 1] < z[0] - 1.0)) {
    throw DivergenceError("semigroup integral does not converge at the origin",
                          {{"t", t}, {"x", x}, {"lambda", lp.lambda()}});
  }
}

quad::Integrand make_integrand(Problem problem, const LambdaParam& lp, double t, double x, const DataFunction& f,
                               double upper = kInf) {
  const double two_lambda = 2.0 * lp.lambda();
  return [problem, lp, t, x, &f, two_lambda, upper](double y) {
    if (y >= upper) return 0.0;
    const double sg = f.sign(y);
    if (sg == 0.0) return 0.0;
    const double lk = log_kernel(problem, lp, t, x, y);
    if (lk == -kInf) return 0.0;
    return sg * std::exp(lk + two_lambda * std::log(y) + f.log_abs(y));
  };
}

struct PlannedApply {
  ApplyResult result;
  quad::Plan plan;
};

PlannedApply apply_planned(Problem problem, const LambdaParam& lp, double t, double x, const DataFunction& f,
                           double upper = kInf) {
  require_positive(t, "t");
  require_positive(x, "x");
  Layout layout = apply_layout(problem, lp, t, x, f);
  if (std::isfinite(upper)) {
    std::vector<double> bp;
    for (const auto& seg : layout.segments)
      if (seg.a > 0.0) bp.push_back(seg.a);
    bp.push_back(upper);
    layout.segments = quad::half_line_segments(bp, true);
  } else {
    probe_decay(problem, lp, t, x, f, layout);
  }

  const auto g = make_integrand(problem, lp, t, x, f, upper);
  quad::Options opts;
  opts.rel_tol = 1e-12;
  opts.max_panels = 3000;
  auto r = quad::integrate(g, layout.segments, opts);
  double scale = std::abs(r.value);
  if (r.error > 1e-8 * scale && !f.nonnegative()) {
    // Sign-changing data: measure the error against the integral of |g|.
    scale = std::max(scale, r.plan.apply([&](double y) { return std::abs(g(y)); }));
  }
  if (!(r.error <= 1e-8 * scale) && !(r.error < 1e-300)) {
    throw NumericalError("semigroup quadrature missed its tolerance",
                         {{"t", t}, {"x", x}, {"lambda", lp.lambda()}, {"value", r.value}, {"error", r.error},
                          {"panels", static_cast<double>(r.panels)}});
  }
  return {{r.value, r.error, r.panels}, std::move(r.plan)};
}

double pde_residual(Problem problem, const LambdaParam& lp, double t, double x, const DataFunction& f, double h) {
  require_positive(t, "t");
  require_positive(x, "x");
  if (h <= 0.0) h = std::min(t, x) * 1e-3;
  if (!(h < 0.5 * std::min(t, x))) throw DomainError("finite-difference step too large");
  const PlannedApply centre = apply_planned(problem, lp, t, x, f);
  auto u = [&](double tt, double xx) { return centre.plan.apply(make_integrand(problem, lp, tt, xx, f)); };
  const double u0 = u(t, x);
  const double ut_p = u(t + h, x), ut_m = u(t - h, x);
  const double ux_p = u(t, x + h), ux_m = u(t, x - h);
  const double lam = lp.lambda();
  const double u_xx = (ux_p - 2.0 * u0 + ux_m) / (h * h);
  const double u_x = (ux_p - ux_m) / (2.0 * h);
  const double delta_u = -u_xx - 2.0 * lam / x * u_x;
  double r;
  if (problem == Problem::Heat) {
    const double u_t = (ut_p - ut_m) / (2.0 * h);
    r = u_t + delta_u;
  } else {
    const double u_tt = (ut_p - 2.0 * u0 + ut_m) / (h * h);
    r = u_tt - delta_u;
  }
  return std::abs(r) / (std::abs(u0) + 1.0);
}

}  // namespace

double log_phi_heat(double lambda, double t, double y) {
  require_positive(t, "t");
  require_positive(y, "y");
  const double ly = std::log(y);
  return lambda * ly + lambda * (ly - std::log1p(y)) - y * y / (4.0 * t);
}

double phi_heat(double lambda, double t, double y) { return std::exp(log_phi_heat(lambda, t, y)); }

double log_phi_poisson(double lambda, double y) {
  require_positive(y, "y");
  return 2.0 * lambda * std::log(y) - (lambda + 1.0) * std::log1p(y * y);
}

double phi_poisson(double lambda, double y) { return std::exp(log_phi_poisson(lambda, y)); }

std::string to_string(Problem p) { return p == Problem::Heat ? "heat" : "poisson"; }

IntegrabilityFactor IntegrabilityFactor::heat(double lambda, double t) {
  require_positive(t, "t");
  return {Problem::Heat, lambda, t};
}

IntegrabilityFactor IntegrabilityFactor::poisson(double lambda) { return {Problem::Poisson, lambda, 1.0}; }

double IntegrabilityFactor::log_value(double y) const {
  return kind == Problem::Heat ? log_phi_heat(lambda, t, y) : log_phi_poisson(lambda, y);
}

double IntegrabilityFactor::operator()(double y) const { return std::exp(log_value(y)); }

EstimateReport factor_behavior_check(const IntegrabilityFactor& factor) {
  LambdaParam(factor.lambda).require_nonnegative("factor_behavior_check");
  const double lambda = factor.lambda;
  GridSpec grid{log_axis(factor.t, factor.t, 1), log_axis(1.0, 1.0, 1), log_axis(1e-4, 1e4, 161)};
  SweepOptions opts;
  opts.cap = 1.0 + 1e-12;
  return sweep_ratio(
      grid,
      [&](double, double, double y) {
        const double ly = std::log(y);
        double model;
        if (factor.kind == Problem::Heat)
          model = (y <= 1.0 ? 2.0 * lambda * ly : lambda * ly) - y * y / (4.0 * factor.t);
        else
          model = y <= 1.0 ? 2.0 * lambda * ly : -2.0 * ly;
        return std::exp(factor.log_value(y) - model);
      },
      opts);
}

std::vector<double> AdmissibilityVerdict::partial_integrals() const {
  std::vector<double> out;
  out.reserve(log_partials.size());
  for (double l : log_partials) out.push_back(std::exp(l));
  return out;
}

AdmissibilityVerdict admissibility(const DataFunction& f, const IntegrabilityFactor& factor,
                                   const std::vector<double>& radii) {
  AdmissibilityVerdict v;
  static_cast<TailVerdict&>(v) = analyze_tail(
      [&](double y) {
        const double lf = f.log_abs(y);
        return lf == -kInf ? -kInf : factor.log_value(y) + lf;
      },
      radii, f.split_points());
  return v;
}

ApplyResult heat_apply_result(const LambdaParam& lp, double t, double x, const DataFunction& f) {
  return apply_planned(Problem::Heat, lp, t, x, f).result;
}

ApplyResult poisson_apply_result(const LambdaParam& lp, double t, double x, const DataFunction& f) {
  return apply_planned(Problem::Poisson, lp, t, x, f).result;
}

ApplyResult heat_apply_truncated(const LambdaParam& lp, double t, double x, const DataFunction& f, double upper) {
  require_positive(upper, "upper");
  return apply_planned(Problem::Heat, lp, t, x, f, upper).result;
}

double heat_apply(const LambdaParam& lp, double t, double x, const DataFunction& f) {
  return heat_apply_result(lp, t, x, f).value;
}

double poisson_apply(const LambdaParam& lp, double t, double x, const DataFunction& f) {
  return poisson_apply_result(lp, t, x, f).value;
}

double pde_residual_heat(const LambdaParam& lp, double t, double x, const DataFunction& f, double h) {
  return pde_residual(Problem::Heat, lp, t, x, f, h);
}

double pde_residual_poisson(const LambdaParam& lp, double t, double x, const DataFunction& f, double h) {
  return pde_residual(Problem::Poisson, lp, t, x, f, h);
}

ConvergenceReport convergence_experiment(const LambdaParam& lp, const DataFunction& f, const std::vector<double>& xs,
                                         const std::vector<double>& ts, Problem problem, const Exec& exec) {
  if (xs.empty() || ts.empty()) throw DomainError("convergence experiment needs x and t points");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] < ts[i - 1])) throw DomainError("t schedule must be strictly decreasing");

  ConvergenceReport rep;
  rep.problem = problem;
  rep.xs = xs;
  rep.ts = ts;
  rep.values.assign(ts.size(), std::vector<double>(xs.size()));
  rep.errors.assign(ts.size(), std::vector<double>(xs.size()));
  parallel_for(ts.size() * xs.size(), exec, [&](std::size_t idx) {
    const std::size_t i = idx / xs.size(), j = idx % xs.size();
    const double u = problem == Problem::Heat ? heat_apply(lp, ts[i], xs[j], f) : poisson_apply(lp, ts[i], xs[j], f);
    rep.values[i][j] = u;
    rep.errors[i][j] = std::abs(u - f(xs[j]));
  });

  rep.max_errors.assign(ts.size(), 0.0);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (f.continuous_at(xs[j])) rep.max_errors[i] = std::max(rep.max_errors[i], rep.errors[i][j]);

  rep.monotone = true;
  const std::size_t first = ts.size() > 4 ? ts.size() - 4 : 0;
  for (std::size_t i = first + 1; i < ts.size(); ++i)
    if (rep.max_errors[i] > rep.max_errors[i - 1] + kConvergenceNoiseFloor) rep.monotone = false;
  rep.final_max_error = rep.max_errors.back();
  return rep;
}

double chapman_kolmogorov_check(const LambdaParam& lp, double t, double s, double x, double y) {
  for (double v : {t, s, x, y}) require_positive(v, "chapman_kolmogorov_check argument");
  const double two_lambda = 2.0 * lp.lambda();
  const auto g = [&](double z) {
    return std::exp(log_heat_kernel(lp, {t, x, z}) + log_heat_kernel(lp, {s, z, y}) + two_lambda * std::log(z));
  };
  const double centre = (s * x + t * y) / (t + s);
  const double w = 2.0 * std::sqrt(t * s / (t + s));
  std::vector<double> bp{x, y, centre, 2.0 * t / x, 2.0 * s / y};
  for (double k : {1.0, 3.0, 6.0, 10.0}) {
    bp.push_back(centre + k * w);
    bp.push_back(centre - k * w);
  }
  quad::Options opts;
  opts.rel_tol = 1e-12;
  const auto segs = quad::half_line_segments(bp, true);
  const auto r = quad::integrate(g, segs, opts);
  const double direct = heat_kernel(lp, {t + s, x, y});
  return std::abs(r.value - direct) / direct;
}

}  // namespace bessellab
