#include "aeslab/ngi.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "aeslab/error.hpp"

namespace aeslab {

namespace {

std::uint64_t xor_popcount(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) noexcept {
  std::uint64_t ones = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t wa, wb;
    std::memcpy(&wa, a + i, 8);
    std::memcpy(&wb, b + i, 8);
    ones += static_cast<std::uint64_t>(std::popcount(wa ^ wb));
  }
  for (; i < n; ++i) ones += static_cast<std::uint64_t>(std::popcount<unsigned>(a[i] ^ b[i]));
  return ones;
}

void check_non_empty(ByteView plain, ByteView cipher) {
  if (plain.empty() || cipher.empty()) {
    throw Error(ErrorKind::InvalidInput, "bit difference needs two non-empty inputs");
  }
}

}  // namespace

std::uint64_t popcount(ByteView data) noexcept {
  std::uint64_t ones = 0;
  std::size_t i = 0;
  for (; i + 8 <= data.size(); i += 8) {
    std::uint64_t w;
    std::memcpy(&w, data.data() + i, 8);
    ones += static_cast<std::uint64_t>(std::popcount(w));
  }
  for (; i < data.size(); ++i) ones += static_cast<std::uint64_t>(std::popcount<unsigned>(data[i]));
  return ones;
}

BitDiff xor_diff(ByteView plain, ByteView cipher) {
  check_non_empty(plain, cipher);
  const std::size_t n = std::min(plain.size(), cipher.size());
  BitDiff d;
  d.diff_octets.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.diff_octets[i] = plain[i] ^ cipher[i];
  d.bit_length = static_cast<std::uint64_t>(n) * 8;
  d.ones_count = popcount(d.diff_octets);
  return d;
}

double ones_ratio(const BitDiff& diff) noexcept {
  return static_cast<double>(diff.ones_count) / static_cast<double>(diff.bit_length);
}

double ngi(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw Error(ErrorKind::Domain, "ones ratio must lie in [0, 1], got " + std::to_string(p1));
  }
  const double q = 1.0 - p1;
  return 2.0 - 2.0 * (p1 * p1 + q * q);
}

NgiScore score(ByteView plain, ByteView cipher, Parallelism par) {
  check_non_empty(plain, cipher);
  const std::size_t n = std::min(plain.size(), cipher.size());
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> ones{0};
  for_each_range(chunks, par, [&](std::size_t begin, std::size_t end) {
    const std::size_t lo = begin * kChunk;
    const std::size_t hi = std::min(n, end * kChunk);
    ones.fetch_add(xor_popcount(plain.data() + lo, cipher.data() + lo, hi - lo),
                   std::memory_order_relaxed);
  });
  NgiScore s;
  s.p1 = static_cast<double>(ones.load()) / (static_cast<double>(n) * 8.0);
  s.g = ngi(s.p1);
  return s;
}

}  // namespace aeslab
