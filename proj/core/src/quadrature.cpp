#include "bessellab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include "bessellab/errors.hpp"

namespace bessellab::quad {

namespace {

constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525634812, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7, 9.
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

double mapped_value(const Integrand& f, const Segment& s, double w) {
  switch (s.map) {
    case MapKind::Identity:
      return f(w);
    case MapKind::LogToZero: {
      const double v = 1.0 - w;
      if (v <= 0.0) return 0.0;
      const double y = s.b * std::exp(-w / v);
      if (y == 0.0) return 0.0;
      const double g = f(y);
      return g == 0.0 ? 0.0 : g * y / (v * v);
    }
    case MapKind::ToInfinity: {
      const double v = 1.0 - w;
      if (v <= 0.0) return 0.0;
      const double y = s.a + s.scale * w / v;
      if (!std::isfinite(y)) return 0.0;
      const double g = f(y);
      return g == 0.0 ? 0.0 : g * s.scale / (v * v);
    }
    case MapKind::LogToInfinity: {
      const double v = 1.0 - w;
      if (v <= 0.0) return 0.0;
      const double y = s.a * std::exp(w / v);
      if (!std::isfinite(y)) return 0.0;
      const double g = f(y);
      return g == 0.0 ? 0.0 : g * y / (v * v);
    }
  }
  return 0.0;
}

std::pair<double, double> mapped_range(const Segment& s) {
  if (s.map == MapKind::Identity) return {s.a, s.b};
  return {0.0, 1.0};
}

struct Work {
  std::size_t segment;
  double lo;
  double hi;
  RuleEstimate est;
  bool operator<(const Work& other) const { return est.error < other.est.error; }
};

}  // namespace

RuleEstimate gk21(const Integrand& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double ah = std::abs(half);
  RuleEstimate out;
  out.value = resk * half;
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  out.error = err;
  if (!std::isfinite(out.value)) out.error = kInf;
  return out;
}

double Plan::apply(const Integrand& f) const {
  double total = 0.0;
  for (const auto& p : panels_) {
    const Segment& s = segments_[p.segment];
    total += gk21([&](double w) { return mapped_value(f, s, w); }, p.lo, p.hi).value;
  }
  return total;
}

Result integrate(const Integrand& f, std::span<const Segment> segments, const Options& options) {
  Result result;
  std::vector<Segment> segs(segments.begin(), segments.end());
  std::priority_queue<Work> queue;
  std::vector<Work> done;

  auto evaluate = [&](std::size_t si, double lo, double hi) {
    const Segment& s = segs[si];
    Work w{si, lo, hi, gk21([&](double x) { return mapped_value(f, s, x); }, lo, hi)};
    result.evaluations += 21;
    return w;
  };

  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto [lo, hi] = mapped_range(segs[i]);
    if (!(hi > lo)) continue;
    Work w = evaluate(i, lo, hi);
    total += w.est.value;
    total_err += w.est.error;
    queue.push(w);
  }

  auto tolerance = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(total)); };

  while (!queue.empty() && total_err > tolerance() && queue.size() + done.size() < options.max_panels) {
    Work worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) || !std::isfinite(worst.est.error)) {
      // Interval can no longer be split in floating point.
      if (!std::isfinite(worst.est.error)) {
        throw NumericalError("integrand is not finite on a quadrature panel",
                             {{"lo", worst.lo}, {"hi", worst.hi}});
      }
      done.push_back(worst);
      continue;
    }
    Work left = evaluate(worst.segment, worst.lo, mid);
    Work right = evaluate(worst.segment, mid, worst.hi);
    total += left.est.value + right.est.value - worst.est.value;
    total_err += left.est.error + right.est.error - worst.est.error;
    queue.push(left);
    queue.push(right);
  }

  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Work& a, const Work& b) {
    return a.segment != b.segment ? a.segment < b.segment : a.lo < b.lo;
  });

  std::vector<Plan::Panel> panels;
  panels.reserve(done.size());
  result.value = 0.0;
  result.error = 0.0;
  for (const auto& w : done) {
    result.value += w.est.value;
    result.error += w.est.error;
    panels.push_back({w.segment, w.lo, w.hi});
  }
  result.panels = panels.size();
  result.converged = result.error <= std::max(options.abs_tol, options.rel_tol * std::abs(result.value));
  result.plan = Plan(std::move(segs), std::move(panels));
  return result;
}

namespace {

std::vector<double> clean_breakpoints(std::vector<double> points, double lo, double hi) {
  std::vector<double> out;
  for (double p : points)
    if (std::isfinite(p) && p > lo && p < hi) out.push_back(p);
  std::sort(out.begin(), out.end());
  std::vector<double> unique;
  for (double p : out) {
    const double ref = unique.empty() ? lo : unique.back();
    if (p - ref > 1e-12 * std::max(std::abs(p), 1e-300)) unique.push_back(p);
  }
  if (!unique.empty() && std::isfinite(hi) && hi - unique.back() <= 1e-12 * std::abs(hi)) unique.pop_back();
  return unique;
}

}  // namespace

std::vector<Segment> half_line_segments(std::vector<double> breakpoints, bool log_at_zero) {
  std::vector<double> pts = clean_breakpoints(std::move(breakpoints), 0.0, kInf);
  if (pts.empty()) pts.push_back(1.0);
  std::vector<Segment> segs;
  segs.push_back({0.0, pts.front(), log_at_zero ? MapKind::LogToZero : MapKind::Identity, 1.0});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1], MapKind::Identity, 1.0});
  segs.push_back({pts.back(), kInf, MapKind::LogToInfinity, 1.0});
  return segs;
}

std::vector<Segment> interval_segments(double lo, double hi, std::vector<double> breakpoints) {
  std::vector<double> pts = clean_breakpoints(std::move(breakpoints), lo, hi);
  std::vector<Segment> segs;
  double left = lo;
  for (double p : pts) {
    segs.push_back({left, p, MapKind::Identity, 1.0});
    left = p;
  }
  segs.push_back({left, hi, MapKind::Identity, 1.0});
  return segs;
}

LogResult integrate_log(const Integrand& log_integrand, double lo, double hi, const Options& options,
                        const std::vector<double>& breakpoints) {
  if (!(hi > lo) || lo < 0.0) throw DomainError("integrate_log needs 0 <= lo < hi");

  // Sample points, geometric in both directions from an anchor.
  std::vector<double> pts;
  const bool to_zero = lo == 0.0;
  const bool to_inf = !std::isfinite(hi);
  if (to_zero && to_inf) {
    for (int k = -30; k <= 30; ++k) pts.push_back(std::ldexp(1.0, 2 * k));
  } else if (to_zero) {
    for (int k = 0; k <= 30; ++k) pts.push_back(hi * std::ldexp(1.0, -2 * k));
  } else if (to_inf) {
    for (int k = 0; k <= 30; ++k) pts.push_back(lo * std::ldexp(1.0, 2 * k));
  } else {
    const int n = 32;
    const double ratio = std::log(hi / lo) / n;
    for (int k = 0; k <= n; ++k) pts.push_back(lo * std::exp(ratio * k));
    pts.back() = hi;
  }
  for (double b : breakpoints)
    if (b > lo && b < hi) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double lmax = -kInf;
  auto sample = [&](double p) {
    const double l = log_integrand(p);
    if (std::isnan(l)) throw NumericalError("log-integrand is NaN", {{"y", p}});
    lmax = std::max(lmax, l);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    sample(pts[i]);
    if (i + 1 < pts.size()) sample(0.5 * (pts[i] + pts[i + 1]));
  }
  if (to_zero) sample(0.5 * pts.front());
  else if (pts.front() > lo) sample(0.5 * (lo + pts.front()));
  if (lmax == kInf) return {kInf, 0.0};
  if (lmax == -kInf) return {-kInf, 0.0};

  // A sharp maximum can hide between Kronrod nodes, which then all
  // underflow. Breakpoints at geometric distances from the best sample,
  // down to its e-folding width, resolve it.
  {
    double best = pts.front();
    double best_l = -kInf;
    for (double p : pts) {
      const double l = log_integrand(p);
      if (l > best_l) {
        best_l = l;
        best = p;
      }
    }
    for (double dir : {-1.0, 1.0}) {
      double reach = dir < 0 ? best - lo : (to_inf ? best : hi - best);
      if (!(reach > 0.0)) continue;
      double d = reach;
      for (int k = 0; k < 200; ++k) {
        const double y = best + dir * d;
        if (y > lo && (to_inf || y < hi) && log_integrand(y) >= best_l - 1.0) break;
        d *= 0.5;
      }
      for (double step = d; step < reach; step *= 4.0) pts.push_back(best + dir * step);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }

  std::vector<Segment> segs;
  if (to_zero) segs.push_back({0.0, pts.front(), MapKind::LogToZero, 1.0});
  else segs.push_back({lo, pts.front(), MapKind::Identity, 1.0});
  if (segs.back().b <= segs.back().a) segs.pop_back();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1], MapKind::Identity, 1.0});
  if (to_inf) segs.push_back({pts.back(), kInf, MapKind::LogToInfinity, 1.0});

  const auto scaled = [&](double y) {
    const double l = log_integrand(y);
    // Beyond y ~ 1e154 the y^2 terms of the integrand overflow and cancel to
    // NaN; that far out the mass is dropped like everything past e^709.
    if (std::isnan(l) && y > 1e150) return 0.0;
    return l == -kInf ? 0.0 : std::exp(l - lmax);
  };
  Options opts = options;
  opts.max_panels = std::max<std::size_t>(opts.max_panels, 4 * segs.size());
  const Result r = integrate(scaled, segs, opts);
  if (!std::isfinite(r.value)) return {kInf, 0.0};
  if (r.value <= 0.0) return {-kInf, 0.0};
  return {lmax + std::log(r.value), r.error / r.value};
}

}  // namespace bessellab::quad
