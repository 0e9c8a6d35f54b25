// Fixed-slot parallel loops; results never depend on the thread count.
#pragma once

#include <cstddef>
#include <functional>

namespace qhopf {

void set_thread_count(int n);
int thread_count();

/// Calls body(i) for i in [0, n). Each index runs exactly once; callers
/// write only to slot i so the outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qhopf
