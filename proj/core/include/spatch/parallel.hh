#pragma once

#include <functional>

namespace spatch {

/// Worker-thread cap. SPATCH_THREADS limits it; 0 or unset means all
/// hardware threads. Read once per process.
int thread_limit();

void parallel_for_chunks(int count, const std::function<void(int, int)>& chunk);

/// Runs fn(i) for i in [0, count). Results must be written to disjoint
/// locations by index; output is then identical for any thread count.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  parallel_for_chunks(count, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace spatch
