#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rummy {

inline int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

/// Runs fn(0..chunks-1) on up to `workers` threads and returns the results
/// in chunk order, so any in-order merge is independent of the worker count.
template <typename R, typename F>
std::vector<R> map_chunks(std::size_t chunks, int workers, F&& fn) {
  std::vector<R> out(chunks);
  const std::size_t n = std::min<std::size_t>(chunks, static_cast<std::size_t>(std::max(1, workers)));
  if (n <= 1) {
    for (std::size_t i = 0; i < chunks; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) {
    pool.emplace_back([&, t] {
      (void)t;
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < chunks;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace rummy
