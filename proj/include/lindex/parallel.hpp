#pragma once

#include <cstddef>
#include <functional>

namespace lindex {

// Worker count used by parallel_for.  Defaults to LINDEX_THREADS when set,
// else the hardware concurrency; set_thread_count(0) restores that default.
unsigned thread_count();
void set_thread_count(unsigned n);

// Calls body(i) for i in [0, n) across the worker pool.  Each index runs
// exactly once; results must be written to per-index slots so output does not
// depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lindex
