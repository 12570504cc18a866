#include "aeslab/aes.hpp"

#include <algorithm>

#include "aeslab/error.hpp"
#include "aeslab/random.hpp"

namespace aeslab {

namespace {

using Table = std::array<std::uint8_t, 256>;

constexpr std::uint8_t rotl8(std::uint8_t x, int n) {
  return static_cast<std::uint8_t>((x << n) | (x >> (8 - n)));
}

constexpr std::uint8_t affine(std::uint8_t b) {
  return b ^ rotl8(b, 1) ^ rotl8(b, 2) ^ rotl8(b, 3) ^ rotl8(b, 4) ^ 0x63;
}

// Inverses via the log/antilog tables of generator 0x03.
constexpr Table make_sbox() {
  Table exp{}, log{};
  std::uint8_t x = 1;
  for (int i = 0; i < 255; ++i) {
    exp[i] = x;
    log[x] = static_cast<std::uint8_t>(i);
    x = gf256_mul(x, 0x03);
  }
  Table s{};
  s[0] = affine(0);
  for (int v = 1; v < 256; ++v) {
    const std::uint8_t inv = exp[(255 - log[v]) % 255];
    s[v] = affine(inv);
  }
  return s;
}

constexpr Table invert(const Table& t) {
  Table inv{};
  for (int i = 0; i < 256; ++i) inv[t[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// Checks every entry against the algebraic definition with a slow path that
// shares nothing with the generator beyond gf256_mul: undo the affine map
// and confirm the product with the input is 1.
constexpr std::uint8_t inverse_affine(std::uint8_t s) {
  return rotl8(s, 1) ^ rotl8(s, 3) ^ rotl8(s, 6) ^ 0x05;
}

constexpr bool sbox_matches_definition(const Table& s) {
  if (s[0] != 0x63) return false;
  for (int v = 1; v < 256; ++v) {
    const std::uint8_t inv = inverse_affine(s[v]);
    if (gf256_mul(static_cast<std::uint8_t>(v), inv) != 1) return false;
  }
  return true;
}

constexpr Table kSbox = make_sbox();
constexpr Table kInvSbox = invert(kSbox);
static_assert(sbox_matches_definition(kSbox), "S-box generation failed self-check");
static_assert(kSbox[0x53] == 0xed && kInvSbox[0xed] == 0x53);

constexpr Table make_mul(std::uint8_t k) {
  Table t{};
  for (int i = 0; i < 256; ++i) t[i] = gf256_mul(static_cast<std::uint8_t>(i), k);
  return t;
}

constexpr Table kMul2 = make_mul(0x02);
constexpr Table kMul3 = make_mul(0x03);
constexpr Table kMul9 = make_mul(0x09);
constexpr Table kMul11 = make_mul(0x0b);
constexpr Table kMul13 = make_mul(0x0d);
constexpr Table kMul14 = make_mul(0x0e);

inline void add_round_key(Block& s, const Block& k) {
  for (std::size_t i = 0; i < kBlockSize; ++i) s[i] ^= k[i];
}

// SubBytes followed by ShiftRows. State byte (row r, column c) is s[r + 4c].
inline void sub_shift(Block& s) {
  Block t;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      t[r + 4 * c] = kSbox[s[r + 4 * ((c + r) & 3)]];
    }
  }
  s = t;
}

inline void inv_shift_sub(Block& s) {
  Block t;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      t[r + 4 * ((c + r) & 3)] = kInvSbox[s[r + 4 * c]];
    }
  }
  s = t;
}

inline void mix_columns(Block& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = s.data() + 4 * c;
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = kMul2[a0] ^ kMul3[a1] ^ a2 ^ a3;
    col[1] = a0 ^ kMul2[a1] ^ kMul3[a2] ^ a3;
    col[2] = a0 ^ a1 ^ kMul2[a2] ^ kMul3[a3];
    col[3] = kMul3[a0] ^ a1 ^ a2 ^ kMul2[a3];
  }
}

inline void inv_mix_columns(Block& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = s.data() + 4 * c;
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = kMul14[a0] ^ kMul11[a1] ^ kMul13[a2] ^ kMul9[a3];
    col[1] = kMul9[a0] ^ kMul14[a1] ^ kMul11[a2] ^ kMul13[a3];
    col[2] = kMul13[a0] ^ kMul9[a1] ^ kMul14[a2] ^ kMul11[a3];
    col[3] = kMul11[a0] ^ kMul13[a1] ^ kMul9[a2] ^ kMul14[a3];
  }
}

}  // namespace

std::string_view to_string(KeyVariant v) noexcept {
  switch (v) {
    case KeyVariant::Aes128: return "AES-128";
    case KeyVariant::Aes192: return "AES-192";
    case KeyVariant::Aes256: return "AES-256";
  }
  return "AES-?";
}

std::optional<KeyVariant> variant_from_bits(int bits) noexcept {
  switch (bits) {
    case 128: return KeyVariant::Aes128;
    case 192: return KeyVariant::Aes192;
    case 256: return KeyVariant::Aes256;
    default: return std::nullopt;
  }
}

std::optional<KeyVariant> variant_from_length(std::size_t octets) noexcept {
  return variant_from_bits(static_cast<int>(octets * 8));
}

SecretKey::SecretKey(KeyVariant variant, ByteView octets) : variant_(variant) {
  if (octets.size() != key_length(variant)) {
    throw Error(ErrorKind::InvalidKey,
                std::string(to_string(variant)) + " requires a " +
                    std::to_string(key_length(variant)) + "-octet key, got " +
                    std::to_string(octets.size()));
  }
  std::copy(octets.begin(), octets.end(), octets_.begin());
}

SecretKey SecretKey::from_octets(ByteView octets) {
  const auto v = variant_from_length(octets.size());
  if (!v) {
    throw Error(ErrorKind::InvalidKey,
                "key must be 16, 24 or 32 octets, got " + std::to_string(octets.size()));
  }
  return SecretKey(*v, octets);
}

SecretKey SecretKey::from_hex(std::string_view hex) {
  const Bytes raw = aeslab::from_hex(hex);
  return from_octets(raw);
}

SecretKey SecretKey::generate(KeyVariant variant, RandomSource& rng) {
  const Bytes raw = rng.bytes(key_length(variant));
  return SecretKey(variant, raw);
}

RoundKeySchedule key_expand(const SecretKey& key) {
  RoundKeySchedule sched;
  sched.variant_ = key.variant();

  const std::size_t nk = key_length(key.variant()) / 4;
  const std::size_t total_words = 4 * sched.size();
  std::array<std::uint8_t, 4 * 4 * 15> w{};
  const ByteView k = key.octets();
  std::copy(k.begin(), k.end(), w.begin());

  std::uint8_t rcon = 0x01;
  for (std::size_t i = nk; i < total_words; ++i) {
    std::array<std::uint8_t, 4> t = {w[4 * (i - 1)], w[4 * (i - 1) + 1], w[4 * (i - 1) + 2],
                                     w[4 * (i - 1) + 3]};
    if (i % nk == 0) {
      t = {static_cast<std::uint8_t>(kSbox[t[1]] ^ rcon), kSbox[t[2]], kSbox[t[3]], kSbox[t[0]]};
      rcon = gf256_mul(rcon, 0x02);
    } else if (nk > 6 && i % nk == 4) {
      for (auto& b : t) b = kSbox[b];
    }
    for (std::size_t j = 0; j < 4; ++j) w[4 * i + j] = w[4 * (i - nk) + j] ^ t[j];
  }

  for (std::size_t r = 0; r < sched.size(); ++r) {
    std::copy_n(w.begin() + 16 * r, kBlockSize, sched.keys_[r].begin());
  }
  return sched;
}

Block encrypt_block(const RoundKeySchedule& schedule, const Block& plaintext) noexcept {
  Block s = plaintext;
  const int nr = schedule.rounds();
  add_round_key(s, schedule[0]);
  for (int r = 1; r < nr; ++r) {
    sub_shift(s);
    mix_columns(s);
    add_round_key(s, schedule[r]);
  }
  sub_shift(s);
  add_round_key(s, schedule[nr]);
  return s;
}

Block decrypt_block(const RoundKeySchedule& schedule, const Block& ciphertext) noexcept {
  Block s = ciphertext;
  const int nr = schedule.rounds();
  add_round_key(s, schedule[nr]);
  for (int r = nr - 1; r >= 1; --r) {
    inv_shift_sub(s);
    add_round_key(s, schedule[r]);
    inv_mix_columns(s);
  }
  inv_shift_sub(s);
  add_round_key(s, schedule[0]);
  return s;
}

const std::array<std::uint8_t, 256>& sbox() noexcept { return kSbox; }
const std::array<std::uint8_t, 256>& inverse_sbox() noexcept { return kInvSbox; }

}  // namespace aeslab
