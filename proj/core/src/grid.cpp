#include "bessellab/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "bessellab/errors.hpp"
#include "bessellab/parallel.hpp"

namespace bessellab {

std::vector<double> Axis::points() const {
  if (count == 0) throw DomainError("grid axis needs at least one point");
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) throw DomainError("grid axis needs 0 < lo <= hi < inf");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = spacing == Spacing::Log ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
  }
  out.back() = hi;
  return out;
}

Axis Axis::refined() const {
  Axis r = *this;
  if (count > 1) r.count = 2 * count - 1;
  return r;
}

std::string Axis::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << (spacing == Spacing::Log ? "log" : "lin") << "[" << lo << "," << hi << "]x" << count;
  return os.str();
}

std::string GridSpec::describe() const {
  return "t=" + t.describe() + " x=" + x.describe() + " y=" + y.describe();
}

Axis log_axis(double lo, double hi, std::size_t count) { return Axis{lo, hi, count, Spacing::Log}; }

unsigned resolve_threads(const Exec& exec) {
  if (exec.threads > 0) return exec.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const Exec& exec, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(exec), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::size_t failed_index = n;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(guard);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bessellab
