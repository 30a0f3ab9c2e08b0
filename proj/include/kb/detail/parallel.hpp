#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace kb::detail {

/// Index-space parallel for with deterministic result placement left to the
/// caller (write into slot i).  Exceptions from workers are rethrown (first
/// one wins) after all threads join.
inline void parallel_for(long count, long jobs,
                         const std::function<void(long)>& f) {
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const long width = jobs < count ? jobs : count;
  pool.reserve(width);
  for (long w = 0; w < width; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kb::detail
