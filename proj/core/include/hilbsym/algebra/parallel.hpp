#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hilbsym::algebra {

/// Worker count: HILBSYM_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads; rethrows the first exception.
template <class Body>
void parallel_for(std::size_t count, Body body, unsigned workers = worker_count()) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n = std::min<std::size_t>(workers, count);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hilbsym::algebra
