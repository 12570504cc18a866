#pragma once

// Independent reference computations used only by tests. None of these call
// into the code paths they are used to check.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "aeslab/aes.hpp"
#include "aeslab/bytes.hpp"
#include "aeslab/gf128.hpp"

namespace oracle {

using aeslab::Block;
using aeslab::Bytes;
using aeslab::ByteView;

// Schoolbook product of two polynomials over GF(2) followed by long
// division by x^128 + x^7 + x^2 + x + 1. Coefficients are unpacked into bit
// vectors using GCM order (octet 0 MSB = x^0).
inline Block gf128_mul(const Block& a, const Block& b) {
  auto coeffs = [](const Block& v) {
    std::array<std::uint8_t, 128> c{};
    for (int i = 0; i < 128; ++i) c[i] = (v[i / 8] >> (7 - i % 8)) & 1;
    return c;
  };
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::array<std::uint8_t, 255> prod{};
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) prod[i + j] ^= ca[i] & cb[j];
  for (int d = 254; d >= 128; --d) {
    if (!prod[d]) continue;
    prod[d] = 0;
    prod[d - 128 + 7] ^= 1;
    prod[d - 128 + 2] ^= 1;
    prod[d - 128 + 1] ^= 1;
    prod[d - 128 + 0] ^= 1;
  }
  Block out{};
  for (int i = 0; i < 128; ++i)
    if (prod[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  return out;
}

inline std::uint64_t popcount_bitwise(ByteView data) {
  std::uint64_t n = 0;
  for (auto b : data)
    for (int bit = 0; bit < 8; ++bit) n += (b >> bit) & 1;
  return n;
}

// c_i = E(p_i xor c_{i-1}) written out as a plain loop over the block cipher.
inline Bytes cbc_fold(const aeslab::RoundKeySchedule& sched, const Block& iv, ByteView padded) {
  Bytes out;
  Block prev = iv;
  for (std::size_t off = 0; off < padded.size(); off += 16) {
    Block x;
    for (int j = 0; j < 16; ++j) x[j] = padded[off + j] ^ prev[j];
    prev = aeslab::encrypt_block(sched, x);
    out.insert(out.end(), prev.begin(), prev.end());
  }
  return out;
}

// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  Bytes bytes(std::size_t n) {
    Bytes b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng_());
    return b;
  }

  Block block() {
    Block b;
    for (auto& x : b) x = static_cast<std::uint8_t>(rng_());
    return b;
  }

  aeslab::KeyVariant variant() { return aeslab::kAllVariants[below(3)]; }

  aeslab::SecretKey key(aeslab::KeyVariant v) {
    return aeslab::SecretKey(v, bytes(aeslab::key_length(v)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
