#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace aeslab {

// Worker count for block-parallel modes (ECB, CTR, and the GCM/CCM bodies).
// Chained computations (CBC encryption, CBC-MAC, GHASH) ignore it.
struct Parallelism {
  unsigned workers = 1;

  static Parallelism serial() noexcept { return {1}; }
  static Parallelism hardware() noexcept {
    return {std::max(1u, std::thread::hardware_concurrency())};
  }
};

// Splits [0, count) into contiguous ranges and calls fn(begin, end) for each,
// one range per worker, with at least min_per_worker items per range. Runs
// inline when a single worker suffices.
template <class Fn>
void for_each_range(std::size_t count, Parallelism par, Fn&& fn,
                    std::size_t min_per_worker = 64) {
  std::size_t workers = std::max<std::size_t>(1, par.workers);
  workers = std::min(workers, std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_per_worker)));
  if (workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

}  // namespace aeslab
