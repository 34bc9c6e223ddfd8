#pragma once

// Minimal fork-join helper. Work items write into preallocated slots, so
// results never depend on scheduling.

#include <cstddef>
#include <functional>

namespace bessellab {

struct Exec {
  unsigned threads = 0;  // 0 = available parallelism
};

unsigned resolve_threads(const Exec& exec);

// Calls body(i) for i in [0, n). Rethrows the exception of the lowest
// failing index after all workers have stopped.
void parallel_for(std::size_t n, const Exec& exec, const std::function<void(std::size_t)>& body);

}  // namespace bessellab
