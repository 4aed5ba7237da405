#ifndef PLATJONES_PARALLEL_HPP
#define PLATJONES_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace platjones {

/// Calls body(i) for every i in [0, count), split into contiguous blocks over
/// `workers` threads. Bodies must write only to slots owned by their index;
/// the first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t blocks = std::min<std::size_t>(workers, count);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(blocks);
    for (std::size_t w = 0; w < blocks; ++w) {
      const std::size_t first = count * w / blocks;
      const std::size_t last = count * (w + 1) / blocks;
      pool.emplace_back([&, first, last] {
        try {
          for (std::size_t i = first; i < last; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace platjones

#endif  // PLATJONES_PARALLEL_HPP
