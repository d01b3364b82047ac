#pragma once

#include <cstddef>
#include <functional>

namespace circuitlab {

// Worker count: CIRCUITLAB_THREADS if set (>= 1), else the hardware count.
std::size_t worker_count();

// Runs body(i) for i in [0, count) on up to worker_count() threads. Results
// must be written to per-index slots so ordering stays deterministic. The
// first exception thrown by a worker is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

} // namespace circuitlab
