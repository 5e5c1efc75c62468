/**
 * @file parallel.hpp
 * @brief Minimal fork-join loop. Worker count comes from E6_THREADS
 *        (default: hardware concurrency).
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace e6r {

inline size_t worker_count() {
  size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("E6_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = static_cast<size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return n;
}

/// Calls f(i) for i in [0, n). Each index is handled exactly once; callers
/// must write only to per-index state.
template <class F>
void parallel_for(size_t n, F&& f) {
  const size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace e6r
