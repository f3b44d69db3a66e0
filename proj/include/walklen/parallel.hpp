#pragma once

#include <cstddef>
#include <functional>

namespace walklen {

// Worker count for trial-level parallelism: WALKLEN_WORKERS if set and
// positive, otherwise std::thread::hardware_concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) on a bounded pool. Callers must write to
// disjoint state; results are independent of the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace walklen
