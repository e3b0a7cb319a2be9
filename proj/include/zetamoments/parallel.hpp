// Work distribution with deterministic results: callers index work by block
// and reduce per-block outputs in block order, so the worker count changes
// scheduling only.

#pragma once

#include <cstdint>
#include <functional>

namespace zm {

int default_workers();

// Runs fn(block) for block = 0..n_blocks-1 on up to `workers` threads.
void parallel_for(std::int64_t n_blocks, int workers,
                  const std::function<void(std::int64_t)>& fn);

// Same, with the executing worker's index passed through (for per-worker
// accumulators).  worker ids are in [0, workers).
void parallel_for_workers(std::int64_t n_blocks, int workers,
                          const std::function<void(std::int64_t, int)>& fn);

}  // namespace zm
