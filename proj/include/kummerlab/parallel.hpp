#pragma once

#include <functional>

#include "kummerlab/numeric.hpp"

namespace kummerlab {

// Worker cap: KUMMERLAB_THREADS, with 0 or unset meaning auto.
unsigned worker_count();

// Runs fn over disjoint index chunks covering [0, n). Chunk boundaries are a
// pure function of n and the worker count; callers combine per-index results
// so the outcome is identical however the chunks are scheduled.
void parallel_chunks(u64 n, const std::function<void(u64, u64)>& fn);

} // namespace kummerlab
