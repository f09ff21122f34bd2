#include "mideal/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mideal {

namespace {
std::atomic<int> g_threads{1};
}

void set_worker_threads(int n) {
  g_threads.store(std::max(1, n));
}

int worker_threads() {
  return g_threads.load();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  constexpr std::size_t kChunk = 16;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        while (!failed.load(std::memory_order_relaxed)) {
          std::size_t begin = next.fetch_add(kChunk);
          if (begin >= count)
            return;
          std::size_t end = std::min(begin + kChunk, count);
          for (std::size_t i = begin; i < end; ++i)
            fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true))
          first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool)
    t.join();
  if (first_error)
    std::rethrow_exception(first_error);
}

} // namespace mideal
