#pragma once

#include <cstddef>
#include <functional>

namespace adiarank {

// Worker count resolution: explicit request > ADIARANK_THREADS env var >
// hardware concurrency. 0 means "auto".
std::size_t resolve_worker_count(std::size_t requested = 0);

// Runs fn(i) for i in [0, count). Each index is handled exactly once; callers
// must write results into index-addressed slots so that the outcome does not
// depend on the number of workers. Exceptions are captured and the first one
// (lowest index) is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t workers = 0);

}  // namespace adiarank
