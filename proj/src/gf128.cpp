#include "aeslab/gf128.hpp"

#include <algorithm>

namespace aeslab {

namespace {

constexpr std::uint64_t kReduceHi = 0xe100000000000000ULL;

// Reduction of the four bits shifted out of the low end, pre-shifted left by 48.
constexpr std::array<std::uint64_t, 16> kLast4 = {
    0x0000, 0x1c20, 0x3840, 0x2460, 0x7080, 0x6ca0, 0x48c0, 0x54e0,
    0xe100, 0xfd20, 0xd940, 0xc560, 0x9180, 0x8da0, 0xa9c0, 0xb5e0};

std::uint64_t load_be64(const std::uint8_t* p) noexcept {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

void store_be64(std::uint8_t* p, std::uint64_t v) noexcept {
  for (int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

Block length_block(ByteView aad, ByteView ciphertext) noexcept {
  Block b;
  store_be64(b.data(), static_cast<std::uint64_t>(aad.size()) * 8);
  store_be64(b.data() + 8, static_cast<std::uint64_t>(ciphertext.size()) * 8);
  return b;
}

template <class Mul>
Gf128 fold(Gf128 y, ByteView data, Mul&& mul) noexcept {
  for (std::size_t off = 0; off < data.size(); off += kBlockSize) {
    Block x{};
    const std::size_t len = std::min(kBlockSize, data.size() - off);
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(off), len, x.begin());
    y = mul(y ^ Gf128::from_block(x));
  }
  return y;
}

template <class Mul>
Block ghash_with(ByteView aad, ByteView ciphertext, Mul&& mul) noexcept {
  Gf128 y;
  y = fold(y, aad, mul);
  y = fold(y, ciphertext, mul);
  y = mul(y ^ Gf128::from_block(length_block(aad, ciphertext)));
  return y.to_block();
}

}  // namespace

Gf128 Gf128::from_block(const Block& b) noexcept {
  return {load_be64(b.data()), load_be64(b.data() + 8)};
}

Block Gf128::to_block() const noexcept {
  Block b;
  store_be64(b.data(), hi);
  store_be64(b.data() + 8, lo);
  return b;
}

Gf128 gf128_mul_reference(Gf128 x, Gf128 y) noexcept {
  Gf128 z;
  Gf128 v = y;
  for (int i = 0; i < 128; ++i) {
    const std::uint64_t word = i < 64 ? x.hi : x.lo;
    const int bit = 63 - (i % 64);
    if ((word >> bit) & 1) z = z ^ v;
    const bool carry = v.lo & 1;
    v.lo = (v.lo >> 1) | (v.hi << 63);
    v.hi >>= 1;
    if (carry) v.hi ^= kReduceHi;
  }
  return z;
}

GhashKey::GhashKey(const Block& subkey) noexcept : subkey_(subkey) {
  // table[i] = i * H where the nibble i is read MSB-first as x^0..x^3.
  std::uint64_t vh = load_be64(subkey.data());
  std::uint64_t vl = load_be64(subkey.data() + 8);
  table_hi_[8] = vh;
  table_lo_[8] = vl;
  for (int i = 4; i > 0; i >>= 1) {
    const std::uint64_t t = (vl & 1) ? kReduceHi : 0;
    vl = (vh << 63) | (vl >> 1);
    vh = (vh >> 1) ^ t;
    table_hi_[i] = vh;
    table_lo_[i] = vl;
  }
  for (int i = 2; i <= 8; i *= 2) {
    for (int j = 1; j < i; ++j) {
      table_hi_[i + j] = table_hi_[i] ^ table_hi_[j];
      table_lo_[i + j] = table_lo_[i] ^ table_lo_[j];
    }
  }
}

GhashKey GhashKey::derive(const RoundKeySchedule& sched) noexcept {
  return GhashKey(encrypt_block(sched, Block{}));
}

Gf128 GhashKey::multiply(Gf128 x) const noexcept {
  const Block xb = x.to_block();
  std::uint64_t zh = 0;
  std::uint64_t zl = 0;
  for (int i = 15; i >= 0; --i) {
    const std::uint8_t lo = xb[i] & 0x0f;
    const std::uint8_t hi = xb[i] >> 4;
    if (i != 15) {
      const std::uint8_t rem = zl & 0x0f;
      zl = (zh << 60) | (zl >> 4);
      zh = (zh >> 4) ^ (kLast4[rem] << 48);
    }
    zh ^= table_hi_[lo];
    zl ^= table_lo_[lo];
    const std::uint8_t rem = zl & 0x0f;
    zl = (zh << 60) | (zl >> 4);
    zh = (zh >> 4) ^ (kLast4[rem] << 48);
    zh ^= table_hi_[hi];
    zl ^= table_lo_[hi];
  }
  return {zh, zl};
}

Block ghash(const GhashKey& key, ByteView aad, ByteView ciphertext) noexcept {
  return ghash_with(aad, ciphertext, [&key](Gf128 v) { return key.multiply(v); });
}

Block ghash_reference(const Block& subkey, ByteView aad, ByteView ciphertext) noexcept {
  const Gf128 h = Gf128::from_block(subkey);
  return ghash_with(aad, ciphertext, [h](Gf128 v) { return gf128_mul_reference(v, h); });
}

}  // namespace aeslab
