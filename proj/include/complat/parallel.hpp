#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace complat {

// Splits [0, count) into `jobs` contiguous chunks and runs fn(chunk, begin,
// end) for each, on separate threads when jobs > 1. Callers merge per-chunk
// results in chunk order, so output never depends on the job count.
template <typename Fn>
void for_each_chunk(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::size_t const        chunks = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = count * c / chunks;
    std::size_t end   = count * (c + 1) / chunks;
    workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& w : workers) {
    w.join();
  }
}

// Number of chunks for_each_chunk will use.
inline std::size_t chunk_count(std::size_t count, unsigned jobs) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    return 1;
  }
  return std::min<std::size_t>(jobs, count);
}

}  // namespace complat
