#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace chessplex {

/// Runs fn(begin, end) over contiguous chunks of [0, count). Chunk results
/// must be merged by the caller in index order to stay deterministic.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2 * threads) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t step = (count + threads - 1) / threads;
  std::vector<std::jthread> workers;
  for (std::size_t begin = 0; begin < count; begin += step) {
    const std::size_t end = std::min(count, begin + step);
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

/// Worker count from CHESSPLEX_THREADS, else the hardware concurrency.
unsigned default_thread_count();

}  // namespace chessplex
