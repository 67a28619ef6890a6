#pragma once

#include <cstddef>
#include <functional>

namespace rcsim {

// Resolves a requested worker count: values >= 1 pass through; 0 falls back
// to the RCSIM_THREADS environment variable, then to the hardware thread
// count (at least 1).
int resolve_threads(int requested);

// Runs fn(i) for i in [0, count) on up to `threads` workers with static
// index-block partitioning. fn must be safe to call concurrently for distinct
// indices and must write results only to per-index slots; under that contract
// the outcome does not depend on the worker count. If any call throws, the
// exception raised at the smallest index is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace rcsim
