#pragma once

// GF(2^128) arithmetic in GCM bit order: octet 0 bit 7 is the coefficient of
// x^0, and products are reduced modulo x^128 + x^7 + x^2 + x + 1.

#include <array>
#include <cstdint>

#include "aeslab/aes.hpp"
#include "aeslab/bytes.hpp"

namespace aeslab {

struct Gf128 {
  std::uint64_t hi = 0;  // octets 0..7, big-endian
  std::uint64_t lo = 0;  // octets 8..15, big-endian

  static Gf128 from_block(const Block& b) noexcept;
  Block to_block() const noexcept;

  friend Gf128 operator^(Gf128 a, Gf128 b) noexcept { return {a.hi ^ b.hi, a.lo ^ b.lo}; }
  friend bool operator==(const Gf128&, const Gf128&) = default;
};

// Bitwise shift-and-reduce multiply, one bit of x per step. Slow; this is
// the reference the table path is checked against.
Gf128 gf128_mul_reference(Gf128 x, Gf128 y) noexcept;

// Hash subkey H = E(K, 0^128) with a 16-entry table of nibble multiples,
// giving a multiply that consumes four bits per step.
class GhashKey {
 public:
  explicit GhashKey(const Block& subkey) noexcept;
  static GhashKey derive(const RoundKeySchedule& sched) noexcept;

  const Block& subkey() const noexcept { return subkey_; }

  // x * H
  Gf128 multiply(Gf128 x) const noexcept;

 private:
  Block subkey_;
  std::array<std::uint64_t, 16> table_hi_{};
  std::array<std::uint64_t, 16> table_lo_{};
};

// Zero-pads aad and ciphertext to whole blocks, appends the 64+64-bit
// big-endian bit lengths and folds Y_i = (Y_{i-1} ^ X_i) * H from Y_0 = 0.
Block ghash(const GhashKey& key, ByteView aad, ByteView ciphertext) noexcept;

// Same fold using gf128_mul_reference.
Block ghash_reference(const Block& subkey, ByteView aad, ByteView ciphertext) noexcept;

}  // namespace aeslab
