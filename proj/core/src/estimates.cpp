#include "bessellab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bessellab/errors.hpp"
#include "bessellab/semigroup.hpp"

namespace bessellab {

namespace {

struct Extremes {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  std::array<double, 3> argmin{};
  std::array<double, 3> argmax{};
  bool all_finite = true;
};

Extremes scan(const GridSpec& grid, const RatioFn& ratio, const SweepOptions& options) {
  const auto ts = grid.t.points();
  auto xs = grid.x.points();
  for (double x : options.extra_x)
    if (x > xs.front() && x < xs.back()) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const auto ys = grid.y.points();
  const std::size_t nx = xs.size();
  // One slot per (t, x) row; rows reduce in index order.
  std::vector<Extremes> rows(ts.size() * nx);
  parallel_for(rows.size(), options.exec, [&](std::size_t idx) {
    const double t = ts[idx / nx];
    const double x = xs[idx % nx];
    Extremes& e = rows[idx];
    std::vector<double> row_ys;
    if (options.extra_y) {
      row_ys = options.extra_y(t, x);
      std::erase_if(row_ys, [&](double y) { return !(y >= ys.front() && y <= ys.back()); });
    }
    row_ys.insert(row_ys.begin(), ys.begin(), ys.end());
    for (double y : row_ys) {
      const double r = ratio(t, x, y);
      if (!std::isfinite(r)) {
        e.all_finite = false;
        continue;
      }
      if (r < e.min) {
        e.min = r;
        e.argmin = {t, x, y};
      }
      if (r > e.max) {
        e.max = r;
        e.argmax = {t, x, y};
      }
    }
  });
  Extremes total;
  for (const auto& e : rows) {
    total.all_finite = total.all_finite && e.all_finite;
    if (e.min < total.min) {
      total.min = e.min;
      total.argmin = e.argmin;
    }
    if (e.max > total.max) {
      total.max = e.max;
      total.argmax = e.argmax;
    }
  }
  return total;
}

// Domination bounds are one-sided, and their right-hand side jumps at
// y = M max(x, 1); the sup there is a one-sided limit.
SweepOptions domination_options(SweepOptions options, double M) {
  options.one_sided = true;
  options.extra_x.push_back(1.0);
  options.extra_y = [M](double, double x) {
    const double edge = M * std::max(x, 1.0);
    return std::vector<double>{edge, edge * (1.0 + 1e-12)};
  };
  return options;
}

double relative_change(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Bounded ? "bounded" : "violated"; }

EstimateReport sweep_ratio(const GridSpec& grid, const RatioFn& ratio, const SweepOptions& options) {
  EstimateReport rep;
  rep.grid = grid.describe();
  rep.cap = options.cap;
  rep.drift_limit = options.drift_limit;
  const Extremes coarse = scan(grid, ratio, options);
  rep.min_ratio = coarse.min;
  rep.max_ratio = coarse.max;
  rep.argmin = coarse.argmin;
  rep.argmax = coarse.argmax;
  const bool need_min = !options.one_sided;
  bool ok = coarse.all_finite && (coarse.min > 0.0 || !need_min) && coarse.max < options.cap;
  if (options.refine) {
    const Extremes fine = scan(grid.refined(), ratio, options);
    rep.refined = true;
    rep.refined_min = fine.min;
    rep.refined_max = fine.max;
    rep.drift = relative_change(coarse.max, fine.max);
    if (need_min) rep.drift = std::max(rep.drift, relative_change(coarse.min, fine.min));
    ok = ok && fine.all_finite && (fine.min > 0.0 || !need_min) && fine.max < options.cap &&
         rep.drift <= options.drift_limit;
  }
  rep.verdict = ok ? Verdict::Bounded : Verdict::Violated;
  return rep;
}

EstimateReport heat_regime_band(const LambdaParam& lp, const GridSpec& grid, const SweepOptions& options) {
  lp.require_nonnegative("heat_regime_band");
  SweepOptions opts = options;
  // The model switches at xy = 2t; its one-sided limits are the band edges.
  if (!opts.extra_y) {
    opts.extra_y = [](double t, double x) {
      const double edge = 2.0 * t / x;
      return std::vector<double>{edge, edge * (1.0 + 1e-12)};
    };
  }
  return sweep_ratio(
      grid,
      [&](double t, double x, double y) {
        const KernelPoint pt{t, x, y};
        return std::exp(log_heat_kernel(lp, pt) - log_heat_regime_approx(lp, pt));
      },
      opts);
}

EstimateReport poisson_bound_sweep(const LambdaParam& lp, const GridSpec& grid, const SweepOptions& options) {
  lp.require_nonnegative("poisson_bound_sweep");
  return sweep_ratio(
      grid, [&](double t, double x, double y) { return poisson_bound_ratio(lp, {t, x, y}); }, options);
}

double domination_time_factor(double M) {
  if (!(M > 1.0) || !std::isfinite(M)) throw DomainError("domination lemmas need M > 1");
  return M / (M - 1.0);
}

double domination_factor_time_factor(double M) {
  const double c = domination_time_factor(M);
  return c * c * c;
}

double heat_domination_ratio(const LambdaParam& lp, double M, double t, double x, double y) {
  // Everything in logs: both sides underflow long before their ratio does.
  const double lambda = lp.lambda();
  const double big_c = domination_time_factor(M);
  const double small_c = domination_factor_time_factor(M);
  const double log_xm = std::log(std::min(x, 1.0));
  const double log_y = std::log(y);
  const double lhs = 2.0 * lambda * log_y + log_heat_kernel(lp, {t, x, y});
  double rhs = -lambda * log_xm + log_phi_heat(lambda, small_c * t, y);
  if (y <= M * std::max(x, 1.0)) {
    const double d = x - y;
    const double first = -2.0 * lambda * log_xm - d * d / (4.0 * big_c * t) -
                         0.5 * std::log(std::numbers::pi * big_c * t) + 2.0 * lambda * log_y -
                         lambda * std::log1p(y);
    const double hi = std::max(rhs, first);
    rhs = hi + std::log1p(std::exp(std::min(rhs, first) - hi));
  }
  return std::exp(lhs - rhs);
}

double poisson_domination_ratio(const LambdaParam& lp, double M, double t, double x, double y) {
  const double lambda = lp.lambda();
  domination_time_factor(M);
  const double lhs = std::pow(y, 2.0 * lambda) * poisson_kernel_hyp(lp, {t, x, y});
  double rhs = t * phi_poisson(lambda, y);
  if (y <= M * std::max(x, 1.0))
    rhs += std::pow(std::min(x, 1.0), -2.0 * lambda) * euclidean_poisson(t, x - y) *
           std::pow(std::min(y, 1.0), 2.0 * lambda);
  return lhs / rhs;
}

EstimateReport heat_domination_check(const LambdaParam& lp, double M, const GridSpec& grid,
                                     const SweepOptions& options) {
  lp.require_nonnegative("heat_domination_check");
  domination_time_factor(M);
  return sweep_ratio(
      grid, [&](double t, double x, double y) { return heat_domination_ratio(lp, M, t, x, y); },
      domination_options(options, M));
}

EstimateReport poisson_domination_check(const LambdaParam& lp, double M, const GridSpec& grid,
                                        const SweepOptions& options) {
  lp.require_nonnegative("poisson_domination_check");
  domination_time_factor(M);
  return sweep_ratio(
      grid, [&](double t, double x, double y) { return poisson_domination_ratio(lp, M, t, x, y); },
      domination_options(options, M));
}

}  // namespace bessellab
