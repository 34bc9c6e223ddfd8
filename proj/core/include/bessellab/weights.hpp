#pragma once

// Weight classes D_p^heat and D_p^Poisson: v belongs when
// ||v^{-1/p} phi||_{p'} is finite (for every t < T in the heat case).

#include <string>
#include <vector>

#include "bessellab/parallel.hpp"
#include "bessellab/semigroup.hpp"
#include "bessellab/tail_analysis.hpp"
#include "bessellab/weight_spec.hpp"

namespace bessellab {

class LebesgueExponent {
 public:
  // 1 <= p < inf
  explicit LebesgueExponent(double p);
  double p() const noexcept { return p_; }
  // p/(p-1), +inf for p = 1
  double conjugate() const noexcept { return q_; }

 private:
  double p_;
  double q_;
};

struct NormResult {
  TailStatus status = TailStatus::Inconclusive;
  double value = 0.0;  // +inf when divergent, NaN when inconclusive
  double tail_slope = 0.0;
  TailVerdict tail;    // empty for p = 1
};

// ||v^{-1/p} phi||_{p'}; p = 1 takes the supremum of v^{-1} phi.
NormResult dp_poisson_norm(const WeightSpec& v, double lambda, const LebesgueExponent& p);
NormResult dp_heat_norm(const WeightSpec& v, double lambda, const LebesgueExponent& p, double t);
// ||v^{-1/p} max(y,1)^{-2}||_{p'}
NormResult d_p_norm(const WeightSpec& v, const LebesgueExponent& p);

enum class Membership { Member, NonMember, Inconclusive };
std::string to_string(Membership m);

struct MembershipReport {
  Problem weight_class = Problem::Heat;
  double T = 0.0;                  // heat horizon, +inf when unbounded
  std::vector<double> ts;          // heat times checked
  std::vector<NormResult> norms;   // one per t (heat) or a single entry
  Membership verdict = Membership::Inconclusive;
  std::string note;
};

// Heat: norms at T {1e-2, 0.1, 0.5, 0.9, 0.99, 0.999} (or 10^-2..10^3 when T
// is infinite). phi_t grows with t, so finiteness at the largest checked t
// settles every smaller t.
MembershipReport membership(const WeightSpec& v, double lambda, const LebesgueExponent& p, Problem weight_class,
                            double T = 1.0, const Exec& exec = {});

// Heat-class weight outside the Poisson class:
//   y^{2 lambda + eps} on (0, 1),  exp(-p y^2 / 4T) on [1, inf).
WeightSpec counterexample_weight(double lambda, double p, double T, double eps);

struct InclusionEntry {
  std::string weight;
  Membership poisson = Membership::Inconclusive;
  Membership heat = Membership::Inconclusive;
};

struct InclusionReport {
  double lambda = 0.0;
  double p = 2.0;
  double T = 1.0;
  double eps = 0.0;
  std::vector<InclusionEntry> catalog;  // Poisson members checked for heat membership
  InclusionEntry counterexample;
  double counterexample_slope = 0.0;    // divergence slope of its Poisson norm
  bool inclusion_holds = false;         // every Poisson member is a heat member
  bool strict = false;                  // and the counterexample separates the classes
};

// eps <= 0 selects 0.5/p'.
InclusionReport inclusion_demo(double lambda, double p, double T, double eps = 0.0, const Exec& exec = {});

struct ShellConstants {
  int k = 0;
  double shell_lo = 0.0;   // E_k = [2^{k-1}, 2^k), E_0 = [0, 1)
  double shell_hi = 1.0;
  double measure = 1.0;    // |E_k|
  double V = 0.0;          // ||v^{-1/p} 1{y < R 2^k}||_{p'}
  double C = 0.0;          // |E_k|^{1/s - 1} V_k
};

// Throws DivergenceError naming the shell when v^{-1/p} is not locally
// p'-integrable.
std::vector<ShellConstants> shell_constants(const WeightSpec& v, const LebesgueExponent& p, double R, double s,
                                            int k_max);

// 0 < gamma < (1 - sigma)(1 + 1/p)
bool series_exponent_check(double sigma, double gamma, double p);

}  // namespace bessellab
