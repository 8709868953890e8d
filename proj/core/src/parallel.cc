#include "spatch/parallel.hh"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spatch {

int thread_limit() {
  static const int limit = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    const char* env = std::getenv("SPATCH_THREADS");
    if (!env || !*env) return hw;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 0) return hw;
    if (v == 0) return hw;
    return static_cast<int>(std::min<long>(v, 1024));
  }();
  return limit;
}

void parallel_for_chunks(int count, const std::function<void(int, int)>& chunk) {
  if (count <= 0) return;
  int workers = std::min(thread_limit(), count);
  if (workers <= 1 || count < 64) {
    chunk(0, count);
    return;
  }

  std::mutex mu;
  std::exception_ptr first_error;
  auto guarded = [&](int begin, int end) {
    try {
      chunk(begin, end);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first_error) first_error = std::current_exception();
    }
  };

  int per = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) {
    int begin = w * per;
    int end = std::min(count, begin + per);
    if (begin >= end) break;
    threads.emplace_back(guarded, begin, end);
  }
  guarded(0, std::min(per, count));
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace spatch
