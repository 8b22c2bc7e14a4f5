#pragma once

#include <cstddef>
#include <functional>

namespace locale_lab {

/// Worker count: LOCALE_LAB_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for every i in [0, n) on up to thread_count() threads. Each
/// index is visited exactly once; callers write results into slot i, so output
/// order never depends on scheduling. After a failure no new indices start; the
/// exception from the lowest failing index is rethrown once workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace locale_lab
