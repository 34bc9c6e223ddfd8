#pragma once

// Local maximal operators: sup over 0 < t < a of |u(t, x)| for the heat and
// Poisson semigroups, the local Hardy-Littlewood average M_R^loc, and
// empirical L^p(v) -> L^p(u) probes.

#include <functional>
#include <string>
#include <vector>

#include "bessellab/data_function.hpp"
#include "bessellab/kernels.hpp"
#include "bessellab/parallel.hpp"
#include "bessellab/weight_spec.hpp"
#include "bessellab/weights.hpp"

namespace bessellab {

struct MaximalConfig {
  double a = 1.0;
  // log-spaced nodes on [a 1e-6, a]
  int t_nodes = 48;
  // golden-section passes around the grid argmax (0 disables)
  int refinement = 1;

  void validate() const;
  std::vector<double> nodes() const;
};

double heat_maximal(const LambdaParam& lp, const DataFunction& f, const MaximalConfig& cfg, double x);
double poisson_maximal(const LambdaParam& lp, const DataFunction& f, const MaximalConfig& cfg, double x);

enum class HlRegion {
  Proof,    // |y| < R max(x, 1)
  Printed,  // |y| < R x
};

struct HlGrid {
  double r_min = 1e-4;
  int per_octave = 8;
  HlRegion region = HlRegion::Proof;
};

// Integral of |g| over [lo, hi], 0 <= lo <= hi.
using LocalIntegral = std::function<double(double, double)>;

LocalIntegral abs_integral(const DataFunction& f);
// |g| with its jump points; singular_at_zero selects a log map near 0.
LocalIntegral abs_integral(std::function<double(double)> g, std::vector<double> jumps, bool singular_at_zero);

// Average of |f| 1{y < cutoff} over B_r(x) = (x - r, x + r), f = 0 below 0.
double hl_ball_average(const LocalIntegral& integral, double R, double x, double r, HlRegion region = HlRegion::Proof);

// Supremum of hl_ball_average over centred balls r in [r_min, 2R max(x,1)],
// per_octave radii per doubling plus golden-section refinement.
double local_hl_maximal(const LocalIntegral& integral, double R, double x, const HlGrid& grid = {});
double local_hl_maximal(const DataFunction& f, double R, double x, const HlGrid& grid = {});

enum class MaximalOp { Heat, Poisson, HardyLittlewood };
std::string to_string(MaximalOp op);
MaximalOp parse_maximal_op(const std::string& name);

struct ProbeOptions {
  MaximalConfig cfg;
  double R = 2.0;  // HL truncation
  // x grid for ||Tf||_{L^p(u)}, log-spaced
  double x_lo = 0.05;
  double x_hi = 20.0;
  int x_count = 24;
  Exec exec;
};

struct ProbeSample {
  std::string data;
  double f_norm = 0.0;   // ||f||_{L^p(v)}
  double tf_norm = 0.0;  // ||Tf||_{L^p(u)} on the x grid
  double ratio = 0.0;
  bool diverged = false;  // Tf does not exist: the necessity direction fails
  std::string message;
};

struct BoundednessProbe {
  MaximalOp op = MaximalOp::Heat;
  double lambda = 0.0;
  double p = 2.0;
  std::string v;
  std::string u;
  std::vector<ProbeSample> samples;
  double max_ratio = 0.0;  // operator-norm lower bound
  bool all_finite = false;
  bool necessity_failure = false;
};

// Throws DomainError naming the sample when ||f||_{L^p(v)} is not finite.
BoundednessProbe boundedness_probe(MaximalOp op, const LambdaParam& lp, const WeightSpec& v, const WeightSpec& u,
                                   const LebesgueExponent& p, const std::vector<DataFunction>& samples,
                                   const ProbeOptions& options = {});

// Bounded smooth and indicator data in L^p for every p.
std::vector<DataFunction> probe_catalog();

struct ScaffoldReport {
  double lambda = 0.0;
  double p = 2.0;
  double a = 0.0;
  double T = 0.0;
  double M = 0.0;
  double sigma = 0.0;
  double sigma0 = 0.0;  // 1/M^2
  bool hypotheses_ok = false;
  std::string failure;
  std::string warning;
  MembershipReport v_membership;
  std::string v_tilde;  // (y^{2 lambda}/(y+1)^lambda)^{-p} v
  std::string u2;       // (min(x,1)^{-lambda} (1+x))^{-p}
  NormResult u2_norm;   // ||u2^{-sigma/p} phi_a||_{p'}
  bool u1_constructed = false;
  std::string u1_note;
  std::string recipe;
};

// T is the heat horizon of v; T <= 0 selects 2a.
ScaffoldReport theorem_weight_scaffold(const LambdaParam& lp, const WeightSpec& v, const LebesgueExponent& p, double a,
                                       double M, double sigma, double T = 0.0);

// Local part of the heat maximal sup_t int_{y <= M max(x,1)} W_t f y^{2 lambda}
// over min(x,1)^{-2 lambda} M_M^loc(y^{2 lambda}(y+1)^{-lambda} f)(x).
double slicing_ratio(const LambdaParam& lp, const DataFunction& f, double M, const MaximalConfig& cfg, double x);

}  // namespace bessellab
