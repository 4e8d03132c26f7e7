#pragma once

#include <functional>

namespace snse {

/// Run f(index) for index in [0, count) on up to `threads` workers (0 means
/// hardware concurrency).  Indices are dealt atomically, results must be
/// written to per-index slots by the caller; the first exception is
/// rethrown after all workers join.  Output is independent of the thread
/// count as long as f(i) is a pure function of i.
void parallel_for(int count, int threads, const std::function<void(int)>& f);

/// Resolved worker count (threads == 0 maps to hardware concurrency).
int resolve_threads(int threads);

}  // namespace snse
