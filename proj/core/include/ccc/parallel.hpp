#pragma once

#include <cstdint>
#include <functional>

namespace ccc {

/// Worker count: the CCC_THREADS environment variable when set, otherwise
/// hardware concurrency; always at least 1.
int default_thread_count();

/// Runs fn(chunk_index, begin, end) over [0, n_items) split into fixed
/// chunks. Chunk boundaries depend only on chunk_size, never on the worker
/// count, so per-chunk results can be reduced deterministically afterwards.
void parallel_chunks(std::int64_t n_items, std::int64_t chunk_size, int threads,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn);

std::int64_t chunk_count(std::int64_t n_items, std::int64_t chunk_size);

}  // namespace ccc
