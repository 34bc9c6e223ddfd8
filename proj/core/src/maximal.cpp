#include "bessellab/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bessellab/errors.hpp"
#include "bessellab/quadrature.hpp"
#include "bessellab/semigroup.hpp"
#include "bessellab/tail_analysis.hpp"
#include "golden.hpp"

namespace bessellab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
}

// sup over (0, a] of |u(t)| from the node grid plus golden refinement in log t.
template <class U>
double sup_over_time(const MaximalConfig& cfg, U&& u) {
  cfg.validate();
  const std::vector<double> ts = cfg.nodes();
  std::vector<double> vals(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vals[i] = std::abs(u(ts[i]));
  const std::size_t i = static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
  double best = vals[i];
  if (cfg.refinement > 0) {
    const double lo = std::log(ts[i == 0 ? 0 : i - 1]);
    const double hi = std::log(ts[std::min(i + 1, ts.size() - 1)]);
    const double tol = std::max(1e-12, std::pow(1e-4, cfg.refinement));
    const auto r = detail::golden_max([&](double s) { return std::abs(u(std::exp(s))); }, lo, hi, tol);
    best = std::max(best, r.second);
  }
  return best;
}

double cutoff(double R, double x, HlRegion region) { return region == HlRegion::Proof ? R * std::max(x, 1.0) : R * x; }

// log of int |f|^p v over (0, inf), or DomainError naming the sample.
double log_lp_norm(const DataFunction& f, const WeightSpec& v, double p) {
  std::vector<double> breaks = f.split_points();
  for (double s : v.split_points()) breaks.push_back(s);
  const auto verdict = analyze_tail(
      [&](double y) {
        const double lf = f.log_abs(y);
        if (lf == -kInf) return -kInf;
        return p * lf + v.log_value(y);
      },
      default_radii(), breaks);
  if (verdict.status != TailStatus::Finite || !std::isfinite(verdict.log_total)) {
    throw DomainError("sample " + f.to_string() + " has no finite L^p(v) norm (" + to_string(verdict.status) + ")");
  }
  return verdict.log_total / p;
}

WeightSpec power_of(const WeightSpec& w, double s) {
  std::vector<WeightPiece> pieces = w.pieces();
  for (auto& pc : pieces) {
    pc.c = std::pow(pc.c, s);
    pc.alpha *= s;
    pc.A *= s;
    pc.beta *= s;
    pc.gamma *= s;
  }
  return WeightSpec(std::move(pieces));
}

}  // namespace

void MaximalConfig::validate() const {
  require_positive(a, "a");
  if (t_nodes < 16) throw DomainError("maximal operator needs at least 16 time nodes");
  if (refinement < 0) throw DomainError("refinement must be nonnegative");
}

std::vector<double> MaximalConfig::nodes() const {
  std::vector<double> ts(static_cast<std::size_t>(t_nodes));
  const double lo = a * 1e-6;
  for (int k = 0; k < t_nodes; ++k) ts[k] = lo * std::pow(1e6, static_cast<double>(k) / (t_nodes - 1));
  ts.back() = a;
  return ts;
}

double heat_maximal(const LambdaParam& lp, const DataFunction& f, const MaximalConfig& cfg, double x) {
  require_positive(x, "x");
  return sup_over_time(cfg, [&](double t) { return heat_apply(lp, t, x, f); });
}

double poisson_maximal(const LambdaParam& lp, const DataFunction& f, const MaximalConfig& cfg, double x) {
  require_positive(x, "x");
  return sup_over_time(cfg, [&](double t) { return poisson_apply(lp, t, x, f); });
}

LocalIntegral abs_integral(std::function<double(double)> g, std::vector<double> jumps, bool singular_at_zero) {
  return [g = std::move(g), jumps = std::move(jumps), singular_at_zero](double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    auto segs = quad::interval_segments(lo, hi, jumps);
    if (lo == 0.0 && singular_at_zero) segs.front().map = quad::MapKind::LogToZero;
    const auto r = quad::integrate([&](double y) { return std::abs(g(y)); }, segs);
    return r.value;
  };
}

LocalIntegral abs_integral(const DataFunction& f) {
  return abs_integral([f](double y) { return f(y); }, f.split_points(), f.singular_at_zero());
}

double hl_ball_average(const LocalIntegral& integral, double R, double x, double r, HlRegion region) {
  require_positive(r, "r");
  const double lo = std::max(0.0, x - r);
  const double hi = std::min(x + r, cutoff(R, x, region));
  return hi > lo ? integral(lo, hi) / (2.0 * r) : 0.0;
}

double local_hl_maximal(const LocalIntegral& integral, double R, double x, const HlGrid& grid) {
  require_positive(x, "x");
  if (!(R > 1.0) || !std::isfinite(R)) throw DomainError("R must be > 1");
  require_positive(grid.r_min, "r_min");
  if (grid.per_octave < 1) throw DomainError("per_octave must be positive");
  const double r_max = 2.0 * R * std::max(x, 1.0);
  if (!(grid.r_min < r_max)) throw DomainError("r_min must be below 2R max(x,1)");

  std::vector<double> rs;
  for (int k = 0;; ++k) {
    const double r = r_max * std::exp2(-static_cast<double>(k) / grid.per_octave);
    if (r < grid.r_min) break;
    rs.push_back(r);
  }
  std::reverse(rs.begin(), rs.end());
  // Averages have kinks where the ball edge meets x or the cutoff.
  const double c = cutoff(R, x, grid.region);
  for (double r : {x, c - x}) {
    if (r > grid.r_min && r < r_max) rs.push_back(r);
  }
  std::sort(rs.begin(), rs.end());

  const auto avg = [&](double r) { return hl_ball_average(integral, R, x, r, grid.region); };
  std::vector<double> vals(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) vals[i] = avg(rs[i]);
  const std::size_t i = static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
  double best = vals[i];
  const double lo = std::log(rs[i == 0 ? 0 : i - 1]);
  const double hi = std::log(rs[std::min(i + 1, rs.size() - 1)]);
  if (hi > lo) best = std::max(best, detail::golden_max([&](double s) { return avg(std::exp(s)); }, lo, hi, 1e-10).second);
  return best;
}

double local_hl_maximal(const DataFunction& f, double R, double x, const HlGrid& grid) {
  return local_hl_maximal(abs_integral(f), R, x, grid);
}

std::string to_string(MaximalOp op) {
  switch (op) {
    case MaximalOp::Heat:
      return "heat";
    case MaximalOp::Poisson:
      return "poisson";
    case MaximalOp::HardyLittlewood:
      return "hl";
  }
  return "?";
}

MaximalOp parse_maximal_op(const std::string& name) {
  if (name == "heat") return MaximalOp::Heat;
  if (name == "poisson") return MaximalOp::Poisson;
  if (name == "hl") return MaximalOp::HardyLittlewood;
  throw DomainError("unknown maximal operator '" + name + "' (heat|poisson|hl)");
}

std::vector<DataFunction> probe_catalog() {
  return {DataFunction::bounded_smooth(SmoothTag::Gauss), DataFunction::bounded_smooth(SmoothTag::Exp),
          DataFunction::bounded_smooth(SmoothTag::Sech), DataFunction::indicator(0.0, 1.0),
          DataFunction::indicator(1.0, 3.0)};
}

BoundednessProbe boundedness_probe(MaximalOp op, const LambdaParam& lp, const WeightSpec& v, const WeightSpec& u,
                                   const LebesgueExponent& p, const std::vector<DataFunction>& samples,
                                   const ProbeOptions& options) {
  options.cfg.validate();
  if (options.x_count < 2 || !(options.x_lo > 0.0) || !(options.x_hi > options.x_lo))
    throw DomainError("probe x grid needs 0 < x_lo < x_hi and at least 2 points");
  if (samples.empty()) throw DomainError("probe needs at least one sample");
  if (op != MaximalOp::HardyLittlewood) lp.require_nonnegative("boundedness_probe");

  BoundednessProbe out;
  out.op = op;
  out.lambda = lp.lambda();
  out.p = p.p();
  out.v = v.to_string();
  out.u = u.to_string();

  std::vector<double> log_fnorm(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) log_fnorm[s] = log_lp_norm(samples[s], v, p.p());

  const std::vector<double> xs = log_axis(options.x_lo, options.x_hi, static_cast<std::size_t>(options.x_count)).points();
  const std::size_t nx = xs.size();
  std::vector<double> tf(samples.size() * nx, 0.0);
  std::vector<std::string> errors(samples.size() * nx);

  parallel_for(tf.size(), options.exec, [&](std::size_t k) {
    const DataFunction& f = samples[k / nx];
    const double x = xs[k % nx];
    try {
      switch (op) {
        case MaximalOp::Heat:
          tf[k] = heat_maximal(lp, f, options.cfg, x);
          break;
        case MaximalOp::Poisson:
          tf[k] = poisson_maximal(lp, f, options.cfg, x);
          break;
        case MaximalOp::HardyLittlewood:
          tf[k] = local_hl_maximal(f, options.R, x);
          break;
      }
    } catch (const DivergenceError& e) {
      errors[k] = e.what();
    }
  });

  out.all_finite = true;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    ProbeSample ps;
    ps.data = samples[s].to_string();
    ps.f_norm = std::exp(log_fnorm[s]);
    for (std::size_t i = 0; i < nx; ++i) {
      if (!errors[s * nx + i].empty()) {
        ps.diverged = true;
        ps.message = errors[s * nx + i];
        break;
      }
    }
    if (ps.diverged) {
      ps.tf_norm = kInf;
      ps.ratio = kInf;
      out.necessity_failure = true;
      out.all_finite = false;
    } else {
      // trapezoid in log x of |Tf|^p u x
      double acc = 0.0;
      for (std::size_t i = 0; i < nx; ++i) {
        const double x = xs[i];
        const double g = std::pow(tf[s * nx + i], p.p()) * std::exp(u.log_value(x)) * x;
        const double w = (i == 0 || i + 1 == nx) ? 0.5 : 1.0;
        acc += w * g;
      }
      acc *= std::log(xs[1] / xs[0]);
      ps.tf_norm = std::pow(acc, 1.0 / p.p());
      ps.ratio = ps.tf_norm / ps.f_norm;
      if (!std::isfinite(ps.ratio)) out.all_finite = false;
      out.max_ratio = std::max(out.max_ratio, ps.ratio);
    }
    out.samples.push_back(std::move(ps));
  }
  if (out.necessity_failure) out.max_ratio = kInf;
  return out;
}

ScaffoldReport theorem_weight_scaffold(const LambdaParam& lp, const WeightSpec& v, const LebesgueExponent& p, double a,
                                       double M, double sigma, double T) {
  ScaffoldReport out;
  out.lambda = lp.lambda();
  out.p = p.p();
  out.a = a;
  out.T = T > 0.0 ? T : 2.0 * a;
  out.M = M;
  out.sigma = sigma;
  out.sigma0 = M > 0.0 ? 1.0 / (M * M) : 0.0;
  out.u1_note = "u1 = min(x,1)^{2 lambda p} U with U assembled from Rubio de Francia factorization weights U_k; "
                "not constructed";
  out.recipe = "u = min(u1, u2)";

  if (lp.lambda() < 0.0) {
    out.failure = "lambda must be >= 0";
    return out;
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    out.failure = "a must be positive";
    return out;
  }
  if (!(out.T > a)) {
    out.failure = "heat horizon T must exceed a";
    return out;
  }
  if (!(M > 1.0) || !std::isfinite(M)) {
    out.failure = "M must be > 1";
    return out;
  }
  if (!(sigma > 0.0) || !(sigma < 1.0)) {
    out.failure = "sigma must lie in (0, 1)";
    return out;
  }
  out.v_membership = membership(v, lp.lambda(), p, Problem::Heat, out.T);
  if (out.v_membership.verdict != Membership::Member) {
    out.failure = "v is not a verified member of D_p^heat (" + to_string(out.v_membership.verdict) + ")";
    return out;
  }
  if (sigma > out.sigma0) out.warning = "sigma exceeds sigma0 = 1/M^2; outside the guaranteed range, checks still run";
  out.hypotheses_ok = true;

  const double lam = lp.lambda();
  const double pp = p.p();
  std::vector<WeightPiece> vt = v.pieces();
  for (auto& pc : vt) {
    pc.alpha -= 2.0 * lam * pp;
    pc.gamma += lam * pp;
  }
  out.v_tilde = WeightSpec(std::move(vt)).to_string();

  std::vector<WeightPiece> u2;
  if (lam == 0.0) {
    u2.push_back({0.0, kInf, 1.0, 0.0, 0.0, 0.0, -pp});
  } else {
    u2.push_back({0.0, 1.0, 1.0, lam * pp, 0.0, 0.0, -pp});
    u2.push_back({1.0, kInf, 1.0, 0.0, 0.0, 0.0, -pp});
  }
  const WeightSpec u2_spec(std::move(u2));
  out.u2 = u2_spec.to_string();
  // ||u2^{-sigma/p} phi_a||_{p'} is the D_p^heat norm of u2^sigma at t = a.
  out.u2_norm = dp_heat_norm(power_of(u2_spec, sigma), lam, p, a);
  return out;
}

double slicing_ratio(const LambdaParam& lp, const DataFunction& f, double M, const MaximalConfig& cfg, double x) {
  require_positive(x, "x");
  if (!(M > 1.0)) throw DomainError("M must be > 1");
  lp.require_nonnegative("slicing_ratio");
  const double upper = M * std::max(x, 1.0);
  const double a_part = sup_over_time(cfg, [&](double t) { return heat_apply_truncated(lp, t, x, f, upper).value; });
  const double lam = lp.lambda();
  auto g = [f, lam](double y) { return std::exp(2.0 * lam * std::log(y) - lam * std::log1p(y)) * f(y); };
  const double hl = local_hl_maximal(abs_integral(g, f.split_points(), f.singular_at_zero()), M, x);
  const double bound = std::pow(std::min(x, 1.0), -2.0 * lam) * hl;
  return a_part / bound;
}

}  // namespace bessellab
