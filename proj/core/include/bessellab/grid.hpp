#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bessellab {

enum class Spacing { Linear, Log };

struct Axis {
  double lo = 1.0;
  double hi = 1.0;
  std::size_t count = 1;
  Spacing spacing = Spacing::Log;

  std::vector<double> points() const;
  // Same range with every gap halved.
  Axis refined() const;
  std::string describe() const;
};

// Evaluation grid in (t, x, y); an axis with count 1 is a single point at lo.
struct GridSpec {
  Axis t;
  Axis x;
  Axis y;

  GridSpec refined() const { return {t.refined(), x.refined(), y.refined()}; }
  std::size_t size() const noexcept { return t.count * x.count * y.count; }
  std::string describe() const;
};

// Log-spaced axis helper.
Axis log_axis(double lo, double hi, std::size_t count);

}  // namespace bessellab
