// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bessellab/estimates.hpp"
#include "bessellab/kernels.hpp"
#include "bessellab/maximal.hpp"
#include "bessellab/semigroup.hpp"
#include "bessellab/weights.hpp"
#include "oracle_values.hpp"

#ifndef BESSELLAB_CLI_PATH
#define BESSELLAB_CLI_PATH "bessellab"
#endif

using namespace bessellab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failed_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  Outcome outcome() const {
    std::string d;
    for (const auto& s : failed_) d += (d.empty() ? "" : "; ") + std::string("failed: ") + s;
    for (const auto& s : notes_) d += (d.empty() ? "" : "; ") + s;
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failed_, notes_;
};

std::string g(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1));
  return v;
}

// Log of the reflection closed forms; exact where the kernel itself underflows.
double log_heat0(double t, double x, double y) {
  return -(x - y) * (x - y) / (4 * t) + std::log1p(std::exp(-x * y / t)) - std::log(2 * std::sqrt(kPi * t));
}
double log_heat1(double t, double x, double y) {
  return -(x - y) * (x - y) / (4 * t) + std::log(-std::expm1(-x * y / t)) - std::log(2 * x * y * std::sqrt(kPi * t));
}
double poisson0(double t, double x, double y) {
  return t / kPi * (1 / ((x - y) * (x - y) + t * t) + 1 / ((x + y) * (x + y) + t * t));
}
double poisson1(double t, double x, double y) {
  return 4 * t / kPi / (((x - y) * (x - y) + t * t) * ((x + y) * (x + y) + t * t));
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

// ---------------------------------------------------------------------------

Outcome closed_forms() {
  Notes n;
  double heat_err = 0, poisson_err = 0;
  const auto xs = logspace(0.05, 20, 20), ts = logspace(0.05, 20, 10);
  for (double t : ts)
    for (double x : xs)
      for (double y : xs) {
        heat_err = std::max(heat_err, std::abs(std::expm1(log_heat_kernel(LambdaParam(0), {t, x, y}) - log_heat0(t, x, y))));
        heat_err = std::max(heat_err, std::abs(std::expm1(log_heat_kernel(LambdaParam(1), {t, x, y}) - log_heat1(t, x, y))));
        poisson_err = std::max(poisson_err, rel(poisson_kernel_hyp(LambdaParam(0), {t, x, y}), poisson0(t, x, y)));
        poisson_err = std::max(poisson_err, rel(poisson_kernel_hyp(LambdaParam(1), {t, x, y}), poisson1(t, x, y)));
      }
  n.require(heat_err <= 1e-10, "heat closed forms");
  n.require(poisson_err <= 1e-9, "poisson closed forms");
  n.note("heat max rel " + g(heat_err) + ", poisson max rel " + g(poisson_err) + " on 20x20x10");
  return n.outcome();
}

Outcome cross_method() {
  Notes n;
  const auto axis = logspace(0.05, 20, 10);
  double sub_err = 0, spec_err = 0;
  int spec_pts = 0, spec_skipped = 0;
  for (double lambda : {0.0, 0.5, 1.0, 2.3}) {
    const LambdaParam lp(lambda);
    for (double t : axis)
      for (double x : axis)
        for (double y : axis) sub_err = std::max(sub_err, rel(poisson_kernel_subord(lp, {t, x, y}), poisson_kernel_hyp(lp, {t, x, y})));
    for (double t : logspace(0.01, 20, 10))
      for (double x : axis)
        for (double y : axis) {
          if (!spectral_supported({t, x, y})) {
            ++spec_skipped;
            continue;
          }
          ++spec_pts;
          spec_err = std::max(spec_err, rel(heat_kernel_spectral(lp, {t, x, y}), heat_kernel(lp, {t, x, y})));
        }
  }
  n.require(sub_err <= 1e-6, "subordination vs hypergeometric");
  n.require(spec_err <= 1e-6, "spectral vs explicit");
  n.note("subordination max rel " + g(sub_err) + "; spectral max rel " + g(spec_err) + " on " + std::to_string(spec_pts) +
         " points, " + std::to_string(spec_skipped) + " outside (x-y)^2/4t <= " + g(kSpectralMaxExponent));
  return n.outcome();
}

Outcome mass_and_ck() {
  Notes n;
  const auto one = DataFunction::bounded_smooth(SmoothTag::One);
  double mass = 0, ck = 0;
  for (double lambda : {0.0, 0.5, 1.0, 2.3}) {
    const LambdaParam lp(lambda);
    for (double t : {0.1, 1.0, 10.0})
      for (double x : {0.1, 1.0, 5.0}) {
        mass = std::max(mass, std::abs(heat_apply(lp, t, x, one) - 1.0));
        mass = std::max(mass, std::abs(poisson_apply(lp, t, x, one) - 1.0));
      }
    for (auto [t, s] : {std::pair{0.1, 0.2}, std::pair{0.5, 1.0}})
      for (auto [x, y] : {std::pair{0.5, 1.0}, std::pair{1.0, 3.0}, std::pair{0.2, 0.2}}) {
        const double top = x + y + 40 * std::sqrt(t + s);
        const double lhs = simpson(
            [&](double z) {
              return z == 0.0 ? (lambda == 0.0 ? heat_kernel(lp, {t, x, 1e-300}) * heat_kernel(lp, {s, 1e-300, y}) : 0.0)
                              : heat_kernel(lp, {t, x, z}) * heat_kernel(lp, {s, z, y}) * std::pow(z, 2 * lambda);
            },
            0.0, top, 40000);
        ck = std::max(ck, rel(lhs, heat_kernel(lp, {t + s, x, y})));
      }
  }
  n.require(mass <= 1e-6, "mass");
  n.require(ck <= 1e-5, "chapman-kolmogorov");
  n.note("mass max dev " + g(mass) + ", chapman-kolmogorov max rel " + g(ck) + " (Simpson, 40000 panels)");
  return n.outcome();
}

Outcome derivatives() {
  Notes n;
  double dt_err = 0, pde = 0, eig = 0, eig_closed = 0;
  const std::vector<DataFunction> smooth = {
      DataFunction::bounded_smooth(SmoothTag::Gauss), DataFunction::bounded_smooth(SmoothTag::Exp),
      DataFunction::bounded_smooth(SmoothTag::Sech), DataFunction::bounded_smooth(SmoothTag::Logistic),
      DataFunction::bounded_smooth(SmoothTag::Ricker)};
  for (double lambda : {0.0, 0.5, 1.0, 2.3}) {
    const LambdaParam lp(lambda);
    for (double t : {0.05, 0.5, 2.0})
      for (double x : {0.3, 1.0, 3.0})
        for (double y : {0.3, 1.0, 3.0}) {
          const double h = t * 1e-3;
          auto W = [&](double tt) { return heat_kernel(lp, {tt, x, y}); };
          const double fd = (-W(t + 2 * h) + 8 * W(t + h) - 8 * W(t - h) + W(t - 2 * h)) / (12 * h);
          const double dt = heat_kernel_dt(lp, {t, x, y});
          dt_err = std::max(dt_err, std::abs(dt - fd) / std::max(std::abs(dt), W(t) / t));
        }
    for (const auto& f : smooth)
      for (auto [t, x] : {std::pair{0.5, 1.0}, std::pair{1.0, 2.0}, std::pair{0.25, 0.5}}) {
        pde = std::max(pde, pde_residual_heat(lp, t, x, f));
        pde = std::max(pde, pde_residual_poisson(lp, t, x, f));
      }
    for (double z : logspace(0.1, 10, 5))
      for (double x : logspace(0.1, 10, 5)) eig = std::max(eig, eigenfunction_residual(lp, z, x));
  }
  for (double z : logspace(0.1, 10, 5))
    for (double x : logspace(0.1, 10, 5)) {
      const double c = std::sqrt(2 / kPi);
      eig_closed = std::max(eig_closed, std::abs(eigenfunction(LambdaParam(0), z, x) - c * std::cos(z * x)));
      eig_closed = std::max(eig_closed, std::abs(eigenfunction(LambdaParam(1), z, x) - c * std::sin(z * x) / (z * x)));
    }
  n.require(dt_err <= 1e-6, "dt vs finite differences");
  n.require(pde <= 1e-4, "pde residuals");
  n.require(eig <= 1e-5, "eigenfunction residual");
  n.require(eig_closed <= 1e-12, "eigenfunction closed forms");
  n.note("dt rel " + g(dt_err) + ", pde residual " + g(pde) + ", eigen residual " + g(eig) +
         ", eigenfunction vs trig forms " + g(eig_closed));
  return n.outcome();
}

Outcome poisson_bound() {
  Notes n;
  const auto axis = logspace(0.05, 20, 30);
  std::vector<double> fine;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    fine.push_back(axis[i]);
    if (i + 1 < axis.size()) fine.push_back(std::sqrt(axis[i] * axis[i + 1]));
  }
  for (double lambda : {0.0, 0.5, 1.0, 2.3}) {
    const LambdaParam lp(lambda);
    auto band = [&](const std::vector<double>& a) {
      double lo = INFINITY, hi = 0;
      for (double t : a)
        for (double x : a)
          for (double y : a) {
            const double r = poisson_bound_ratio(lp, {t, x, y});
            if (!std::isfinite(r)) return std::pair{0.0, double(INFINITY)};
            lo = std::min(lo, r);
            hi = std::max(hi, r);
          }
      return std::pair{lo, hi};
    };
    const auto [lo, hi] = band(axis);
    const auto [flo, fhi] = band(fine);
    const double drift = std::max(std::abs(flo - lo) / lo, std::abs(fhi - hi) / hi);
    const std::string tag = "lambda=" + g(lambda);
    n.require(lo > 0 && std::isfinite(hi), tag + " bounded");
    n.require(drift <= 0.05, tag + " refinement drift");
    if (lambda == 0.0)
      n.require(std::min(lo, flo) > 1 / kPi - 1e-9 && std::max(hi, fhi) < 2 / kPi + 1e-9, "lambda=0 band (1/pi, 2/pi)");
    n.note(tag + " [" + g(std::min(lo, flo)) + ", " + g(std::max(hi, fhi)) + "] drift " + g(drift));
  }
  return n.outcome();
}

Outcome domination() {
  Notes n;
  const GridSpec grid{log_axis(0.01, 1, 20), log_axis(0.05, 10, 20), log_axis(0.05, 10, 20)};
  for (double lambda : {0.0, 1.0}) {
    const LambdaParam lp(lambda);
    for (const char* kind : {"heat", "poisson"}) {
      std::vector<double> sups;
      std::string line = std::string(kind) + " lambda=" + g(lambda) + " sups";
      for (double M : {1.25, 2.0, 4.0}) {
        const auto r = std::string(kind) == "heat" ? heat_domination_check(lp, M, grid) : poisson_domination_check(lp, M, grid);
        const double sup = std::max(r.max_ratio, r.refined_max);
        sups.push_back(sup);
        line += " M=" + g(M) + ":" + g(sup) + "(drift " + g(r.drift) + ")";
        n.require(r.verdict == Verdict::Bounded, std::string(kind) + " lambda=" + g(lambda) + " M=" + g(M) + " finite and stable");
      }
      n.require(sups[1] <= sups[0] && sups[2] <= sups[1],
                std::string(kind) + " lambda=" + g(lambda) + " constant nonincreasing in M");
      n.note(line);
    }
  }
  return n.outcome();
}

Outcome convergence() {
  Notes n;
  const auto xs = logspace(0.5, 2.0, 9);
  const std::vector<double> ts = {1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<DataFunction> data;
  for (auto tag : {SmoothTag::Exp, SmoothTag::Gauss, SmoothTag::One, SmoothTag::Sech, SmoothTag::Logistic, SmoothTag::Ricker})
    data.push_back(DataFunction::bounded_smooth(tag));
  double worst = 0;
  for (double lambda : {0.0, 1.0})
    for (Problem pr : {Problem::Heat, Problem::Poisson})
      for (const auto& f : data) {
        const auto r = convergence_experiment(LambdaParam(lambda), f, xs, ts, pr);
        // Independent error of the last step.
        double last = 0;
        for (double x : xs) {
          const double u = pr == Problem::Heat ? heat_apply(LambdaParam(lambda), 1e-4, x, f)
                                               : poisson_apply(LambdaParam(lambda), 1e-4, x, f);
          last = std::max(last, std::abs(u - f(x)));
        }
        const std::string tag = to_string(pr) + " " + f.to_string() + " lambda=" + g(lambda);
        n.require(r.monotone, tag + " nonincreasing");
        n.require(last < 1e-3, tag + " final error");
        worst = std::max(worst, last);
      }
  const auto jump = DataFunction::indicator(0.0, 1.0);
  const double hj = heat_apply(LambdaParam(0), 1e-3, 1.0, jump);
  const double pj = poisson_apply(LambdaParam(0), 1e-3, 1.0, jump);
  n.require(std::abs(hj - 0.5) <= 1e-2 && std::abs(pj - 0.5) <= 1e-2, "half-sum at the jump");
  n.note("worst final error " + g(worst) + "; jump heat " + g(hj) + ", poisson " + g(pj));
  return n.outcome();
}

Outcome weight_classes() {
  Notes n;
  const auto one = WeightSpec::constant();
  const double pn = dp_poisson_norm(one, 0.0, LebesgueExponent(2)).value;
  const double hn = dp_heat_norm(one, 0.0, LebesgueExponent(2), 1.0).value;
  n.require(std::abs(pn - std::sqrt(kPi) / 2) <= 1e-6, "poisson norm sqrt(pi)/2");
  n.require(std::abs(hn - std::pow(kPi / 2, 0.25)) <= 1e-6, "heat norm (pi/2)^(1/4)");
  n.note("poisson norm " + g(pn) + ", heat norm " + std::to_string(hn));
  for (auto [lambda, p, T] : {std::tuple{0.0, 2.0, 1.0}, std::tuple{1.0, 1.5, 2.0}}) {
    const auto r = inclusion_demo(lambda, p, T);
    const std::string tag = "(" + g(lambda) + "," + g(p) + "," + g(T) + ")";
    n.require(r.counterexample.heat == Membership::Member, tag + " counterexample heat member");
    n.require(r.counterexample.poisson == Membership::NonMember, tag + " counterexample poisson non-member");
    n.require(r.counterexample_slope > 0, tag + " divergence slope positive");
    n.require(r.strict, tag + " strict inclusion");
    n.note(tag + " slope " + g(r.counterexample_slope));
  }
  return n.outcome();
}

double exact_integral(int which, double lo, double hi) {
  switch (which) {
    case 0: return std::max(0.0, std::min(hi, 1.0) - std::max(lo, 0.0));
    case 1: return hi - lo;
    case 2: return std::sqrt(kPi) / 2 * (std::erf(hi) - std::erf(lo));
    default: return std::exp(-lo) - std::exp(-hi);
  }
}

Outcome maximal() {
  Notes n;
  const auto one = DataFunction::bounded_smooth(SmoothTag::One);
  double dev = 0;
  for (double lambda : {0.0, 1.0, 2.3})
    for (double x : {0.2, 1.0, 5.0}) {
      dev = std::max(dev, std::abs(heat_maximal(LambdaParam(lambda), one, {}, x) - 1));
      dev = std::max(dev, std::abs(poisson_maximal(LambdaParam(lambda), one, {}, x) - 1));
    }
  n.require(dev <= 1e-6, "maximal of one");

  const char* names[] = {"indicator(0, 1)", "one", "gauss", "exp"};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ux(0.05, 8.0), uR(1.1, 5.0);
  double hl = 0;
  for (int i = 0; i < 20; ++i) {
    const int which = i % 4;
    const double x = ux(rng), R = uR(rng);
    const double cut = R * std::max(x, 1.0);
    double ref = 0;
    for (double r : logspace(1e-4, 2 * cut, 10000)) {
      const double lo = std::max(0.0, x - r), hi = std::min(x + r, cut);
      if (hi > lo) ref = std::max(ref, exact_integral(which, lo, hi) / (2 * r));
    }
    hl = std::max(hl, rel(local_hl_maximal(DataFunction::parse(names[which]), R, x), ref));
  }
  n.require(hl <= 1e-3, "hardy-littlewood vs radius scan");

  const auto u = WeightSpec::parse("piece [0,inf): 1*(1+y)^-2");
  std::string probe = "probe max ratios";
  for (auto op : {MaximalOp::Heat, MaximalOp::Poisson, MaximalOp::HardyLittlewood}) {
    const auto pr = boundedness_probe(op, LambdaParam(0), WeightSpec::constant(), u, LebesgueExponent(2), probe_catalog());
    n.require(pr.all_finite && std::isfinite(pr.max_ratio), to_string(op) + " probe finite");
    probe += " " + to_string(op) + ":" + g(pr.max_ratio);
  }

  struct Row {
    double sigma, gamma, p;
    bool expected;
  };
  const Row table[] = {{0.5, 0.5, 2, true},  {0.5, 0.75, 2, false}, {0.9, 0.2, 1, false},   {0.9, 0.19, 1, true},
                       {0.25, 1.0, 1, true}, {0.25, 0.94, 4, false}, {0.1, 0.1, 100, true}, {0.5, 0.74, 2, true}};
  bool truth = true;
  for (const auto& r : table) truth = truth && series_exponent_check(r.sigma, r.gamma, r.p) == r.expected;
  n.require(truth, "series exponent truth table");

  double scaffold = 0;
  for (const auto& r : oracle::scaffold_table) {
    const double M = std::floor(1 / std::sqrt(r[1]));
    const auto rep = theorem_weight_scaffold(LambdaParam(r[0]), WeightSpec::constant(), LebesgueExponent(2), 1.0, M, r[1]);
    n.require(rep.hypotheses_ok && !rep.u2.empty() && rep.u2_norm.status == TailStatus::Finite, "scaffold u2 norm finite");
    scaffold = std::max(scaffold, rel(rep.u2_norm.value, r[2]));
  }
  n.require(scaffold <= 1e-6, "scaffold norm vs reference");
  n.note("maximal dev " + g(dev) + ", hl rel " + g(hl) + ", " + probe + ", scaffold rel " + g(scaffold));
  return n.outcome();
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 65536> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  Notes n;
  const std::string cmd = std::string("\"") + BESSELLAB_CLI_PATH + "\" verify --suite all --no-timings";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  n.require(s1 == 0 && s2 == 0, "verify exit status");
  n.require(!a.empty() && a == b, "byte-identical output");
  n.note(std::to_string(a.size()) + " bytes per run");
  return n.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"closed-form kernel equality", 10, closed_forms},
      {"cross-method agreement", 60, cross_method},
      {"mass conservation and chapman-kolmogorov", 60, mass_and_ck},
      {"derivative and pde checks", 60, derivatives},
      {"two-sided poisson estimate", 120, poisson_bound},
      {"domination lemmas", 120, domination},
      {"convergence to initial data", 120, convergence},
      {"weight classes", 30, weight_classes},
      {"maximal operators", 120, maximal},
      {"determinism", 600, determinism},
  };
  int failures = 0;
  int k = 0;
  for (const auto& c : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; runtime " + g(secs) + " s over the " + g(c.limit_s) + " s limit";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << c.title << " [" << g(secs) << " s] "
              << o.detail << std::endl;
  }
  std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
