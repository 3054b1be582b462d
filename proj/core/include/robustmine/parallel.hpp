#pragma once

#include <cstddef>
#include <functional>

namespace robustmine {

/// Worker count: hardware concurrency, capped by the ROBUST_MINER_THREADS
/// environment variable when it holds a positive integer.
std::size_t worker_count();

/// Calls fn(i) for every i in [0, n), split into contiguous chunks across
/// worker_count() threads. fn must only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace robustmine
