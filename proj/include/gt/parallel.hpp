#pragma once
#include <cstddef>
#include <functional>

namespace gt {

// Worker cap: GT_MAX_PARALLELISM when set (>= 1), else hardware concurrency.
int max_parallelism();

// Runs fn(i) for every i in [0, n), using at most max_parallelism() threads.
// Callers keep determinism by writing results into per-index slots.  The
// first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gt
