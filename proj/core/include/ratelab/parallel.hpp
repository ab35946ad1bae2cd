#pragma once

#include <cstddef>
#include <functional>

namespace ratelab::detail {

// Worker count for data-parallel loops. Capped by the QKD_RATELAB_THREADS
// environment variable when set; defaults to the hardware concurrency.
unsigned worker_count();

// Runs fn(0..n-1) across workers. Falls back to a plain loop for small n,
// single-worker configurations, and nested calls. The caller owns output
// ordering (write by index); the first exception thrown by fn is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ratelab::detail
