#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace entwidth {

// Runs body(i) for i in [0, count). Work is handed out in dynamically sized
// blocks; the caller must make writes disjoint per index so results do not
// depend on scheduling.
template <typename F>
inline void parallel_for(std::size_t count, int threads, F&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  const std::size_t block =
      std::max<std::size_t>(1, count / (8 * static_cast<std::size_t>(threads)));

  std::mutex err_mutex;
  std::exception_ptr err;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t start = next.fetch_add(block);
        if (start >= count) return;
        const std::size_t stop = std::min(count, start + block);
        for (std::size_t i = start; i < stop; ++i) body(i);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(err_mutex);
      if (!err) err = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (err) std::rethrow_exception(err);
}

inline int default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace entwidth
