#pragma once

// ECB, CBC and CTR over the reference block cipher, plus the message types
// shared with the authenticated modes.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "aeslab/aes.hpp"
#include "aeslab/bytes.hpp"
#include "aeslab/parallel.hpp"

namespace aeslab {

class RandomSource;

enum class Mode : std::uint8_t { Ecb = 1, Cbc = 2, Ctr = 3, Ccm = 4, Gcm = 5 };

// Row order used by every report table.
inline constexpr std::array<Mode, 5> kReportModeOrder = {Mode::Ecb, Mode::Cbc, Mode::Ccm,
                                                          Mode::Ctr, Mode::Gcm};

std::string_view to_string(Mode mode) noexcept;
// Case-insensitive "ecb", "cbc", ...
std::optional<Mode> mode_from_string(std::string_view name) noexcept;

constexpr bool is_authenticated(Mode m) noexcept { return m == Mode::Ccm || m == Mode::Gcm; }

// c_0 for CBC.
struct InitialValue {
  Block octets{};

  static InitialValue generate(RandomSource& rng);
  friend bool operator==(const InitialValue&, const InitialValue&) = default;
};

// Counter block i (1-based) is nonce || (initial_counter + i - 1), where the
// counter is a 64-bit big-endian integer that wraps modulo 2^64.
struct CounterSpec {
  std::array<std::uint8_t, 8> nonce{};
  std::uint64_t initial_counter = 0;

  Block counter_block(std::uint64_t index) const noexcept;
  Block to_block() const noexcept { return counter_block(1); }
  static CounterSpec from_block(const Block& b) noexcept;
  // Random nonce, counter starting at zero.
  static CounterSpec generate(RandomSource& rng);
  friend bool operator==(const CounterSpec&, const CounterSpec&) = default;
};

// Nonce for CCM (7..13 octets) or GCM (exactly 12, enforced by the GCM calls).
class AeadNonce {
 public:
  static constexpr std::size_t kMinLength = 7;
  static constexpr std::size_t kMaxLength = 13;
  static constexpr std::size_t kDefaultLength = 12;

  explicit AeadNonce(ByteView octets);
  static AeadNonce generate(RandomSource& rng, std::size_t length = kDefaultLength);

  ByteView octets() const noexcept { return octets_; }
  std::size_t size() const noexcept { return octets_.size(); }
  friend bool operator==(const AeadNonce&, const AeadNonce&) = default;

 private:
  Bytes octets_;
};

using AuthTag = Block;

using ModeHeader = std::variant<std::monostate, InitialValue, CounterSpec, AeadNonce>;

struct SealedMessage {
  Mode mode = Mode::Ecb;
  KeyVariant key_variant = KeyVariant::Aes128;
  ModeHeader header;
  Bytes body;
  std::optional<AuthTag> tag;

  friend bool operator==(const SealedMessage&, const SealedMessage&) = default;
};

// PKCS#7: always appends 1..16 octets of value n.
Bytes pad(ByteView data);
// Throws Error(Padding) on a malformed tail, Error(InvalidInput) when the
// length is not a positive multiple of 16.
Bytes unpad(ByteView data);

SealedMessage ecb_encrypt(const SecretKey& key, ByteView plaintext, Parallelism par = {});
Bytes ecb_decrypt(const SecretKey& key, const SealedMessage& msg, Parallelism par = {});

SealedMessage cbc_encrypt(const SecretKey& key, ByteView plaintext, const InitialValue& iv);
SealedMessage cbc_encrypt(const SecretKey& key, ByteView plaintext, RandomSource& rng);
Bytes cbc_decrypt(const SecretKey& key, const SealedMessage& msg, Parallelism par = {});

SealedMessage ctr_encrypt(const SecretKey& key, ByteView plaintext, const CounterSpec& spec,
                          Parallelism par = {});
SealedMessage ctr_encrypt(const SecretKey& key, ByteView plaintext, RandomSource& rng,
                          Parallelism par = {});
Bytes ctr_decrypt(const SecretKey& key, const SealedMessage& msg, Parallelism par = {});

// Raw building blocks, also used by the authenticated modes and benchmarks.
void ecb_blocks(const RoundKeySchedule& sched, ByteView in, MutableByteView out, bool encrypt,
                Parallelism par);
void ctr_xor(const RoundKeySchedule& sched, const CounterSpec& spec, ByteView in,
             MutableByteView out, Parallelism par);

}  // namespace aeslab
