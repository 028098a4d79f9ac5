#include "ccc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ccc {

int default_thread_count() {
  if (const char* env = std::getenv("CCC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::int64_t chunk_count(std::int64_t n_items, std::int64_t chunk_size) {
  return (n_items + chunk_size - 1) / chunk_size;
}

void parallel_chunks(std::int64_t n_items, std::int64_t chunk_size, int threads,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn) {
  if (n_items <= 0) return;
  if (chunk_size <= 0) throw std::invalid_argument("parallel_chunks: chunk_size must be > 0");
  const std::int64_t chunks = chunk_count(n_items, chunk_size);
  if (threads <= 0) threads = default_thread_count();
  if (threads > chunks) threads = static_cast<int>(chunks);

  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = c * chunk_size;
    const std::int64_t end = std::min(n_items, begin + chunk_size);
    fn(c, begin, end);
  };

  if (threads <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      try {
        for (std::int64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
          if (failed.load(std::memory_order_relaxed)) return;
          run_chunk(c);
        }
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ccc
