#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace reidem {

// Splits [0, n) into at most `threads` contiguous chunks and runs
// fn(chunk_index, begin, end) on each. Chunk boundaries depend only on
// (n, threads); callers merge per-chunk results in chunk order, so output
// never depends on scheduling.
template <typename Fn>
void run_chunked(std::size_t n, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  std::size_t chunks = std::min<std::size_t>(threads, n);
  if (chunks <= 1) {
    if (n > 0) fn(std::size_t(0), std::size_t(0), n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  std::size_t per = n / chunks, extra = n % chunks, begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace reidem
