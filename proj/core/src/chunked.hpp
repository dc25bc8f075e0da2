#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace rothlab::detail {

// Fixed chunk grid so results do not depend on the worker count: each chunk
// accumulates locally, the chunk results are combined in chunk order.
inline constexpr std::size_t kChunks = 64;

template <typename Fn>
double chunked_sum(std::uint64_t n, Fn&& per_chunk) {
  const std::size_t chunks = (n < kChunks) ? (n ? 1 : 0) : kChunks;
  std::vector<double> partial(chunks, 0.0);
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(chunks ? chunks : 1));
  auto run = [&](unsigned w) {
    for (std::size_t c = w; c < chunks; c += workers) {
      const std::uint64_t lo = n * c / chunks;
      const std::uint64_t hi = n * (c + 1) / chunks;
      partial[c] = per_chunk(lo, hi);
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

// Same grid, no reduction; per_chunk(chunk_index, lo, hi).
template <typename Fn>
void chunked_for_indexed(std::uint64_t n, Fn&& per_chunk) {
  const std::size_t chunks = (n < kChunks) ? (n ? 1 : 0) : kChunks;
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(chunks ? chunks : 1));
  auto run = [&](unsigned w) {
    for (std::size_t c = w; c < chunks; c += workers) {
      const std::uint64_t lo = n * c / chunks;
      const std::uint64_t hi = n * (c + 1) / chunks;
      per_chunk(c, lo, hi);
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
  }
}

template <typename Fn>
void chunked_for(std::uint64_t n, Fn&& per_chunk) {
  chunked_for_indexed(n, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
    per_chunk(lo, hi);
  });
}

}  // namespace rothlab::detail
