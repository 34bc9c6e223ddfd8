#include "bessellab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bessellab/errors.hpp"
#include "bessellab/quadrature.hpp"
#include "golden.hpp"

namespace bessellab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using LogFn = std::function<double(double)>;

double refine_max(const LogFn& log_g, double s_lo, double s_hi) {
  return detail::golden_max([&](double s) { return log_g(std::exp(s)); }, s_lo, s_hi).second;
}

// ess sup of exp(L) on (0, hi): grid maximum refined by golden section;
// unbounded growth toward either end of (1e-12, 1e12) counts as infinite.
NormResult sup_norm(const LogFn& log_g, const std::vector<double>& breaks, double hi = kInf) {
  NormResult out;
  const double top = std::isfinite(hi) ? hi * (1.0 - 1e-12) : 1e12;
  const double bottom = 1e-12;
  std::vector<double> ys;
  const int n = 4000;
  for (int k = 0; k <= n; ++k) ys.push_back(bottom * std::pow(top / bottom, static_cast<double>(k) / n));
  for (double b : breaks) {
    if (b > bottom && b < top) {
      ys.push_back(b);
      ys.push_back(b * (1.0 - 1e-12));
    }
  }
  std::sort(ys.begin(), ys.end());
  std::vector<double> ls(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) ls[i] = log_g(ys[i]);

  const bool grows_at_zero = ls[0] - log_g(bottom * 10.0) > 1e-3;
  const bool grows_at_inf = !std::isfinite(hi) && ls.back() - log_g(top / 10.0) > 1e-3;
  if (grows_at_zero || grows_at_inf) {
    out.status = TailStatus::Divergent;
    out.value = kInf;
    out.tail_slope = grows_at_inf ? (ls.back() - log_g(top / 10.0)) / std::log(10.0)
                                  : (ls[0] - log_g(bottom * 10.0)) / std::log(10.0);
    return out;
  }
  const std::size_t i = static_cast<std::size_t>(std::max_element(ls.begin(), ls.end()) - ls.begin());
  double best = ls[i];
  if (i > 0 && i + 1 < ys.size()) best = std::max(best, refine_max(log_g, std::log(ys[i - 1]), std::log(ys[i + 1])));
  out.status = TailStatus::Finite;
  out.value = std::exp(best);
  return out;
}

// ||exp(L)||_q on (0, inf).
NormResult lq_norm(const LogFn& log_g, double q, const std::vector<double>& breaks) {
  if (!std::isfinite(q)) return sup_norm(log_g, breaks);
  NormResult out;
  out.tail = analyze_tail(
      [&](double y) {
        const double l = log_g(y);
        return l == -kInf ? -kInf : q * l;
      },
      default_radii(), breaks);
  out.status = out.tail.status;
  out.tail_slope = out.tail.tail_slope;
  switch (out.status) {
    case TailStatus::Finite: out.value = std::exp(out.tail.log_total / q); break;
    case TailStatus::Divergent: out.value = kInf; break;
    case TailStatus::Inconclusive: out.value = kNaN; break;
  }
  return out;
}

Membership verdict_of(const std::vector<NormResult>& norms) {
  bool all_finite = true;
  for (const auto& n : norms) {
    if (n.status == TailStatus::Divergent) return Membership::NonMember;
    if (n.status != TailStatus::Finite) all_finite = false;
  }
  return all_finite ? Membership::Member : Membership::Inconclusive;
}

}  // namespace

LebesgueExponent::LebesgueExponent(double p) : p_(p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("Lebesgue exponent must satisfy 1 <= p < inf");
  q_ = p == 1.0 ? kInf : p / (p - 1.0);
}

NormResult dp_poisson_norm(const WeightSpec& v, double lambda, const LebesgueExponent& p) {
  LambdaParam(lambda).require_nonnegative("dp_poisson_norm");
  const double ip = 1.0 / p.p();
  return lq_norm([&](double y) { return -ip * v.log_value(y) + log_phi_poisson(lambda, y); }, p.conjugate(),
                 v.split_points());
}

NormResult dp_heat_norm(const WeightSpec& v, double lambda, const LebesgueExponent& p, double t) {
  LambdaParam(lambda).require_nonnegative("dp_heat_norm");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("dp_heat_norm needs 0 < t < inf");
  const double ip = 1.0 / p.p();
  return lq_norm([&](double y) { return -ip * v.log_value(y) + log_phi_heat(lambda, t, y); }, p.conjugate(),
                 v.split_points());
}

NormResult d_p_norm(const WeightSpec& v, const LebesgueExponent& p) {
  const double ip = 1.0 / p.p();
  return lq_norm([&](double y) { return -ip * v.log_value(y) - 2.0 * std::log(std::max(y, 1.0)); }, p.conjugate(),
                 v.split_points());
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NonMember: return "non-member";
    case Membership::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MembershipReport membership(const WeightSpec& v, double lambda, const LebesgueExponent& p, Problem weight_class,
                            double T, const Exec& exec) {
  MembershipReport rep;
  rep.weight_class = weight_class;
  if (weight_class == Problem::Poisson) {
    rep.norms.push_back(dp_poisson_norm(v, lambda, p));
    rep.verdict = verdict_of(rep.norms);
    return rep;
  }
  if (!(T > 0.0)) throw DomainError("heat class horizon T must be positive");
  rep.T = T;
  if (std::isfinite(T)) {
    for (double f : {1e-2, 0.1, 0.5, 0.9, 0.99, 0.999}) rep.ts.push_back(f * T);
    rep.note = "phi_t increases with t: finiteness at t = 0.999 T covers every smaller t";
  } else {
    for (double t : {1e-2, 1e-1, 1.0, 10.0, 100.0, 1000.0}) rep.ts.push_back(t);
    rep.note = "unbounded horizon: only the scheduled times are checked";
  }
  rep.norms.resize(rep.ts.size());
  parallel_for(rep.ts.size(), exec, [&](std::size_t i) { rep.norms[i] = dp_heat_norm(v, lambda, p, rep.ts[i]); });
  rep.verdict = verdict_of(rep.norms);
  return rep;
}

WeightSpec counterexample_weight(double lambda, double p, double T, double eps) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("counterexample needs 0 < T < inf");
  if (!(p >= 1.0)) throw DomainError("counterexample needs p >= 1");
  WeightPiece near{0.0, 1.0, 1.0, 2.0 * lambda + eps};
  WeightPiece far{1.0, kInf, 1.0, 0.0, -p / (4.0 * T)};
  return WeightSpec({near, far});
}

InclusionReport inclusion_demo(double lambda, double p, double T, double eps, const Exec& exec) {
  LambdaParam(lambda).require_nonnegative("inclusion_demo");
  const LebesgueExponent ex(p);
  if (ex.p() == 1.0) throw DomainError("inclusion_demo needs p > 1");
  InclusionReport rep;
  rep.lambda = lambda;
  rep.p = p;
  rep.T = T;
  rep.eps = eps > 0.0 ? eps : 0.5 / ex.conjugate();

  const std::vector<std::string> catalog = {
      "piece [0,inf): 1",
      "piece [0,inf): 1*(1+y)^2",
      "piece [0,inf): 1*y^0.5",
      "piece [0,1): 1; piece [1,inf): 1*exp(0.5*y^2)",
      "piece [0,inf): 2*log^1(y+e)",
  };
  rep.catalog.resize(catalog.size());
  parallel_for(catalog.size(), exec, [&](std::size_t i) {
    const WeightSpec v = WeightSpec::parse(catalog[i]);
    InclusionEntry e;
    e.weight = v.to_string();
    e.poisson = membership(v, lambda, ex, Problem::Poisson).verdict;
    e.heat = membership(v, lambda, ex, Problem::Heat, T).verdict;
    rep.catalog[i] = e;
  });
  rep.inclusion_holds = true;
  for (const auto& e : rep.catalog)
    if (e.poisson == Membership::Member && e.heat != Membership::Member) rep.inclusion_holds = false;

  const WeightSpec cx = counterexample_weight(lambda, p, T, rep.eps);
  rep.counterexample.weight = cx.to_string();
  const auto pois = membership(cx, lambda, ex, Problem::Poisson);
  rep.counterexample.poisson = pois.verdict;
  rep.counterexample_slope = pois.norms.front().tail_slope;
  rep.counterexample.heat = membership(cx, lambda, ex, Problem::Heat, T, exec).verdict;
  rep.strict = rep.inclusion_holds && rep.counterexample.heat == Membership::Member &&
               rep.counterexample.poisson == Membership::NonMember && rep.counterexample_slope > 0.0;
  return rep;
}

std::vector<ShellConstants> shell_constants(const WeightSpec& v, const LebesgueExponent& p, double R, double s,
                                            int k_max) {
  if (!(R > 1.0) || !std::isfinite(R)) throw DomainError("shell_constants needs R > 1");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("shell_constants needs 0 < s < 1");
  if (k_max < 4) throw DomainError("shell_constants needs k_max >= 4");

  const double ip = 1.0 / p.p();
  const double q = p.conjugate();
  const LogFn log_g = [&](double y) { return -ip * v.log_value(y); };

  if (std::isfinite(q)) {
    // y v^{-q/p} must vanish at the origin for local integrability.
    const double a = std::log(1e-12) + q * log_g(1e-12);
    const double b = std::log(1e-10) + q * log_g(1e-10);
    if (!(a < b)) {
      throw DivergenceError("v^{-1/p} is not locally p'-integrable: V_k diverges on shell 0 (y < R)",
                            {{"shell", 0.0}, {"R", R}});
    }
  }

  std::vector<ShellConstants> out;
  quad::Options opts;
  opts.rel_tol = 1e-12;
  for (int k = 0; k <= k_max; ++k) {
    ShellConstants sc;
    sc.k = k;
    sc.shell_lo = k == 0 ? 0.0 : std::ldexp(1.0, k - 1);
    sc.shell_hi = std::ldexp(1.0, k);
    sc.measure = k == 0 ? 1.0 : std::ldexp(1.0, k - 1);
    const double radius = R * std::ldexp(1.0, k);
    if (std::isfinite(q)) {
      const auto r = quad::integrate_log([&](double y) { return q * log_g(y); }, 0.0, radius, opts, v.split_points());
      sc.V = std::exp(r.log_value / q);
    } else {
      const NormResult n = sup_norm(log_g, v.split_points(), radius);
      if (n.status != TailStatus::Finite)
        throw DivergenceError("v^{-1} is not locally bounded on shell " + std::to_string(k), {{"shell", double(k)}});
      sc.V = n.value;
    }
    if (!std::isfinite(sc.V))
      throw DivergenceError("V_k is infinite on shell " + std::to_string(k), {{"shell", static_cast<double>(k)}});
    sc.C = std::pow(sc.measure, 1.0 / s - 1.0) * sc.V;
    out.push_back(sc);
  }
  return out;
}

bool series_exponent_check(double sigma, double gamma, double p) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("series_exponent_check needs 0 < sigma < 1");
  if (!(gamma > 0.0)) throw DomainError("series_exponent_check needs gamma > 0");
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("series_exponent_check needs 1 <= p < inf");
  return gamma < (1.0 - sigma) * (1.0 + 1.0 / p);
}

}  // namespace bessellab
