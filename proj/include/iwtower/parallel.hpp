#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace iwtower {

/// Process-wide cap on worker threads used by orbit- and level-parallel loops.
inline std::atomic<unsigned>& thread_cap() {
  static std::atomic<unsigned> cap{1};
  return cap;
}

inline void set_thread_cap(unsigned k) { thread_cap() = std::max(1u, k); }

/// Runs body(i) for i in [0, count) on up to thread_cap() threads. The first exception
/// thrown by any task is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_cap().load(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace iwtower
