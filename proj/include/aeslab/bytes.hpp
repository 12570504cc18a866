#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aeslab {

inline constexpr std::size_t kBlockSize = 16;

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using MutableByteView = std::span<std::uint8_t>;

// The 4x4 AES state, column-major as in FIPS-197.
using Block = std::array<std::uint8_t, kBlockSize>;

// Lowercase, no separators.
std::string to_hex(ByteView data);

// Accepts upper or lower case; throws Error(InvalidInput) on odd length or
// non-hex characters.
Bytes from_hex(std::string_view hex);

Block block_from_hex(std::string_view hex);

inline ByteView view(const Block& b) noexcept { return {b.data(), b.size()}; }

inline Block xor_blocks(const Block& a, const Block& b) noexcept {
  Block out;
  for (std::size_t i = 0; i < kBlockSize; ++i) out[i] = a[i] ^ b[i];
  return out;
}

inline void xor_into(MutableByteView dst, ByteView src) noexcept {
  for (std::size_t i = 0; i < dst.size() && i < src.size(); ++i) dst[i] ^= src[i];
}

// Compares every octet regardless of where the first mismatch is.
bool equal_all_octets(ByteView a, ByteView b) noexcept;

}  // namespace aeslab
