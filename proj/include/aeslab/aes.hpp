#pragma once

// Reference AES (FIPS-197) for 128/192/256-bit keys.
//
// NOT CONSTANT TIME. The S-box and multiplication tables are indexed by
// secret-dependent values, so this implementation leaks through cache and
// timing side channels. It exists for measurement and study, not for
// protecting data on shared hardware.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "aeslab/bytes.hpp"

namespace aeslab {

class RandomSource;

enum class KeyVariant { Aes128, Aes192, Aes256 };

inline constexpr std::array<KeyVariant, 3> kAllVariants = {
    KeyVariant::Aes128, KeyVariant::Aes192, KeyVariant::Aes256};

constexpr std::size_t key_length(KeyVariant v) noexcept {
  switch (v) {
    case KeyVariant::Aes128: return 16;
    case KeyVariant::Aes192: return 24;
    case KeyVariant::Aes256: return 32;
  }
  return 0;
}

constexpr int key_bits(KeyVariant v) noexcept { return static_cast<int>(key_length(v) * 8); }

constexpr int round_count(KeyVariant v) noexcept {
  return static_cast<int>(key_length(v) / 4) + 6;
}

std::string_view to_string(KeyVariant v) noexcept;
std::optional<KeyVariant> variant_from_bits(int bits) noexcept;
std::optional<KeyVariant> variant_from_length(std::size_t octets) noexcept;

class SecretKey {
 public:
  // Throws Error(InvalidKey) unless octets.size() == key_length(variant).
  SecretKey(KeyVariant variant, ByteView octets);

  // Infers the variant from the length.
  static SecretKey from_octets(ByteView octets);
  static SecretKey from_hex(std::string_view hex);
  static SecretKey generate(KeyVariant variant, RandomSource& rng);

  KeyVariant variant() const noexcept { return variant_; }
  ByteView octets() const noexcept { return {octets_.data(), key_length(variant_)}; }

 private:
  KeyVariant variant_;
  std::array<std::uint8_t, 32> octets_{};
};

// Nr + 1 round keys. Immutable once built, so one schedule can be shared by
// any number of threads.
class RoundKeySchedule {
 public:
  KeyVariant variant() const noexcept { return variant_; }
  int rounds() const noexcept { return round_count(variant_); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(rounds()) + 1; }
  const Block& operator[](std::size_t i) const noexcept { return keys_[i]; }
  std::span<const Block> round_keys() const noexcept { return {keys_.data(), size()}; }

 private:
  friend RoundKeySchedule key_expand(const SecretKey& key);
  KeyVariant variant_ = KeyVariant::Aes128;
  std::array<Block, 15> keys_{};
};

RoundKeySchedule key_expand(const SecretKey& key);

Block encrypt_block(const RoundKeySchedule& schedule, const Block& plaintext) noexcept;
Block decrypt_block(const RoundKeySchedule& schedule, const Block& ciphertext) noexcept;

// GF(2^8) multiplication modulo x^8 + x^4 + x^3 + x + 1.
constexpr std::uint8_t gf256_mul(std::uint8_t a, std::uint8_t b) noexcept {
  std::uint8_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a = static_cast<std::uint8_t>((a & 0x80) ? ((a << 1) ^ 0x1b) : (a << 1));
    b >>= 1;
  }
  return r;
}

const std::array<std::uint8_t, 256>& sbox() noexcept;
const std::array<std::uint8_t, 256>& inverse_sbox() noexcept;

}  // namespace aeslab
