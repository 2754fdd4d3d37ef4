#ifndef WFSMC_PARALLEL_HPP
#define WFSMC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wfsmc {

/// Run fn(i) for i in [0, n) across `workers` threads in fixed contiguous
/// blocks. Each index owns its outputs and RNG stream, so the decomposition
/// cannot change results; with workers <= 1 the loop runs inline. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned t_count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(t_count);
  const std::size_t chunk = (n + t_count - 1) / t_count;
  for (unsigned w = 0; w < t_count; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace wfsmc

#endif
