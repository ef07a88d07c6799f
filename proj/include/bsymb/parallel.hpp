#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace bsymb {

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(chunk_index, begin, end) on each. Chunk boundaries depend only on
// (count, threads), so per-chunk results merge deterministically by index.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  unsigned nchunks = threads;
  if (static_cast<std::uint64_t>(nchunks) > count) nchunks = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  const std::uint64_t per = count / nchunks, extra = count % nchunks;
  std::uint64_t begin = 0;
  for (unsigned c = 0; c < nchunks; ++c) {
    const std::uint64_t len = per + (c < extra ? 1 : 0);
    pool.emplace_back([&fn, c, begin, len] { fn(c, begin, begin + len); });
    begin += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace bsymb
