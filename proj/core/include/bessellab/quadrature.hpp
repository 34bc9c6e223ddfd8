#pragma once

// Globally adaptive Gauss-Kronrod (10/21 point) integration on a list of
// segments, each with its own change of variables so that semi-infinite
// ranges and integrable endpoint singularities are reduced to [0, 1].

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace bessellab::quad {

using Integrand = std::function<double(double)>;

enum class MapKind {
  Identity,       // [a, b]
  LogToZero,      // (0, b]:   y = b exp(-w/(1-w))
  ToInfinity,     // [a, inf): y = a + scale w/(1-w)
  LogToInfinity,  // [a, inf): y = a exp(w/(1-w)), a > 0
};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  MapKind map = MapKind::Identity;
  double scale = 1.0;
};

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_panels = 4000;
};

struct RuleEstimate {
  double value = 0.0;
  double error = 0.0;
};

// One 21-point Kronrod panel on [lo, hi] with the QUADPACK error heuristic.
RuleEstimate gk21(const Integrand& f, double lo, double hi);

// Fixed panel layout recorded from an adaptive run. Re-applying it to a
// nearby integrand gives a result that depends smoothly on parameters, which
// is what finite-difference residuals need.
class Plan {
 public:
  struct Panel {
    std::size_t segment;
    double lo;
    double hi;
  };

  Plan() = default;
  Plan(std::vector<Segment> segments, std::vector<Panel> panels)
      : segments_(std::move(segments)), panels_(std::move(panels)) {}

  double apply(const Integrand& f) const;
  std::size_t size() const noexcept { return panels_.size(); }
  const std::vector<Segment>& segments() const noexcept { return segments_; }

 private:
  std::vector<Segment> segments_;
  std::vector<Panel> panels_;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  std::size_t panels = 0;
  std::size_t evaluations = 0;
  Plan plan;
};

Result integrate(const Integrand& f, std::span<const Segment> segments, const Options& options = {});

// Segments covering (0, inf) split at the given breakpoints. Breakpoints
// that are nonpositive, non-finite or duplicated are dropped. The first
// segment uses LogToZero when log_at_zero is set, the last LogToInfinity.
std::vector<Segment> half_line_segments(std::vector<double> breakpoints, bool log_at_zero);

// Segments covering [lo, hi] split at the breakpoints that fall inside.
std::vector<Segment> interval_segments(double lo, double hi, std::vector<double> breakpoints);

// Integral of exp(L(y)) over [lo, hi] (hi may be infinite), returned as a
// logarithm so that integrands far outside double range stay usable.
// Returns -inf for an identically vanishing integrand.
struct LogResult {
  double log_value = -std::numeric_limits<double>::infinity();
  double rel_error = 0.0;
};
// Breakpoints inside (lo, hi) become segment boundaries, so jumps and
// narrow supports are not missed.
LogResult integrate_log(const Integrand& log_integrand, double lo, double hi, const Options& options = {},
                        const std::vector<double>& breakpoints = {});

}  // namespace bessellab::quad
