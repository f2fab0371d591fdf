#pragma once

#include <cstdint>
#include <functional>

namespace symineq {

/// Worker count for parallel trial execution. SYMINEQ_THREADS (positive
/// integer) caps it; otherwise hardware concurrency clamped to [1, 8].
int thread_budget();

/// Runs fn(i) for i in [0, n) on up to thread_budget() threads, contiguous
/// chunks. Callers must write only to per-index slots; results are then
/// independent of the thread count.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn);

}  // namespace symineq
