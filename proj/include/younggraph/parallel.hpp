#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace younggraph {

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

/// out[k] = fn(items[k]). Work is handed out dynamically, but results are
/// stored by index, so the output never depends on the thread count. The
/// first exception thrown by any worker is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned threads = default_threads()) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < items.size(); ++k) out[k] = fn(items[k]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
          try {
            out[k] = fn(items[k]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = items.size();
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace younggraph
