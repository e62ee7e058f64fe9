#pragma once

#include <cstddef>
#include <functional>

namespace charvar {

/// Worker count for fan-out verification: `requested` if nonzero, else the
/// CHARVAR_THREADS environment variable, else the hardware concurrency.
unsigned thread_budget(unsigned requested = 0);

/// Runs fn(0) ... fn(count-1) on up to `threads` workers. Callers keep
/// determinism by writing results into pre-sized slots indexed by i.
/// Exceptions thrown by fn are rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace charvar
