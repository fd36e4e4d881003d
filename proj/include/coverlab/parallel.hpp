#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace coverlab {

/// Worker count for internal parallel loops: COVERLAB_THREADS when set to a
/// positive integer, otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t thread_count();

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(begin, end, chunk_index). Chunk boundaries depend only on `count` and
/// thread_count(), so callers that merge per-chunk results in chunk order get
/// schedule-independent output.
template <class Body>
void parallel_chunks(std::size_t count, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(thread_count(), count));
  if (workers <= 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
}

inline std::size_t chunk_count(std::size_t count) {
  return std::max<std::size_t>(1, std::min(thread_count(), count));
}

}  // namespace coverlab
