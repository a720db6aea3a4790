#pragma once

#include <cstddef>
#include <functional>

namespace revlab {

// Effective worker count: hardware concurrency capped by the
// REVIVAL_LAB_THREADS environment variable (values < 1 mean serial).
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks;
// every i is computed exactly once and writes only to its own slot, so the
// result is independent of the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace revlab
