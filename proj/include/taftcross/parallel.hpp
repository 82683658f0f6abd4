#pragma once

#include <cstddef>
#include <functional>

namespace taftcross {

/// Width used by sweeps that do not receive an explicit job count. Defaults to
/// the hardware concurrency; 0 restores that default.
void set_default_jobs(unsigned jobs);
unsigned default_jobs();

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// body(begin, end, worker) on each. Chunk w always precedes chunk w+1, so
/// callers can merge per-worker results in worker order deterministically.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace taftcross
