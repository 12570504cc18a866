#include "aeslab/bytes.hpp"

#include "aeslab/error.hpp"

namespace aeslab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidKey: return "invalid key";
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::InvalidNonce: return "invalid nonce length";
    case ErrorKind::MessageTooLong: return "message too long";
    case ErrorKind::ModeMismatch: return "mode mismatch";
    case ErrorKind::Padding: return "bad padding";
    case ErrorKind::AuthenticationFailed: return "authentication failure";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Format: return "format error";
    case ErrorKind::Io: return "i/o error";
  }
  return "unknown error";
}

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, "hex string has odd length");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = nibble(hex[2 * i]);
    const int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorKind::InvalidInput, "non-hex character in input");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

Block block_from_hex(std::string_view hex) {
  const Bytes raw = from_hex(hex);
  if (raw.size() != kBlockSize) {
    throw Error(ErrorKind::InvalidInput, "block must be exactly 16 octets");
  }
  Block b;
  std::copy(raw.begin(), raw.end(), b.begin());
  return b;
}

bool equal_all_octets(ByteView a, ByteView b) noexcept {
  if (a.size() != b.size()) return false;
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc |= a[i] ^ b[i];
  return acc == 0;
}

}  // namespace aeslab
