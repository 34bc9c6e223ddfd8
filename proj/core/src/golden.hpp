#pragma once

#include <cmath>
#include <utility>

namespace bessellab::detail {

// Golden-section search for a maximum of f on [lo, hi]; returns (arg, value).
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 80) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && b - a > tol; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace bessellab::detail
