/// \file threading.hpp
/// Optional fan-out for independent sub-runs (study ladders, bridge pairs).
/// GCHLAB_THREADS caps the number of worker threads; unset means serial.

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gchlab {

inline int subrun_thread_cap() {
  const char* env = std::getenv("GCHLAB_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

/// Runs task(0..count-1); results must be keyed by index, not completion
/// order. Rethrows the lowest-index exception after all workers join.
inline void parallel_tasks(int count, const std::function<void(int)>& task) {
  const int workers = std::min(count, subrun_thread_cap());
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          task(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

} // namespace gchlab
