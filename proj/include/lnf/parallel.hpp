#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace lnf {

// Splits [0, count) into at most `workers` contiguous chunks and runs
// body(chunk_index, begin, end) on each. Callers write per-chunk results
// into preallocated slots indexed by chunk_index and merge them in order,
// so outputs do not depend on scheduling.
template <typename Body>
inline int parallel_chunks(std::size_t count, int workers, Body&& body) {
  if (workers < 1) workers = 1;
  const int chunks = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), count));
  if (chunks <= 1) {
    if (count > 0) body(0, std::size_t{0}, count);
    return count > 0 ? 1 : 0;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const std::size_t base = count / chunks, extra = count % chunks;
  std::size_t begin = 0;
  for (int c = 0; c < chunks; ++c) {
    std::size_t len = base + (static_cast<std::size_t>(c) < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([&, c, begin, end] { body(c, begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
  return chunks;
}

}  // namespace lnf
