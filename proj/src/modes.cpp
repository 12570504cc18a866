#include "aeslab/modes.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "aeslab/error.hpp"
#include "aeslab/random.hpp"

namespace aeslab {

namespace {

Block load_block(ByteView src, std::size_t offset) noexcept {
  Block b;
  std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(offset), kBlockSize, b.begin());
  return b;
}

void store_block(MutableByteView dst, std::size_t offset, const Block& b) noexcept {
  std::copy(b.begin(), b.end(), dst.begin() + static_cast<std::ptrdiff_t>(offset));
}

void expect_mode(const SealedMessage& msg, Mode want) {
  if (msg.mode != want) {
    throw Error(ErrorKind::ModeMismatch, "expected " + std::string(to_string(want)) +
                                             " message, got " + std::string(to_string(msg.mode)));
  }
}

void expect_block_multiple(const SealedMessage& msg) {
  if (msg.body.empty() || msg.body.size() % kBlockSize != 0) {
    throw Error(ErrorKind::InvalidInput,
                std::string(to_string(msg.mode)) +
                    " ciphertext must be a positive multiple of 16 octets");
  }
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Ecb: return "ECB";
    case Mode::Cbc: return "CBC";
    case Mode::Ctr: return "CTR";
    case Mode::Ccm: return "CCM";
    case Mode::Gcm: return "GCM";
  }
  return "???";
}

std::optional<Mode> mode_from_string(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ecb") return Mode::Ecb;
  if (lower == "cbc") return Mode::Cbc;
  if (lower == "ctr") return Mode::Ctr;
  if (lower == "ccm") return Mode::Ccm;
  if (lower == "gcm") return Mode::Gcm;
  return std::nullopt;
}

InitialValue InitialValue::generate(RandomSource& rng) { return {rng.array<kBlockSize>()}; }

Block CounterSpec::counter_block(std::uint64_t index) const noexcept {
  Block b;
  std::copy(nonce.begin(), nonce.end(), b.begin());
  const std::uint64_t ctr = initial_counter + (index - 1);
  for (int i = 0; i < 8; ++i) b[15 - i] = static_cast<std::uint8_t>(ctr >> (8 * i));
  return b;
}

CounterSpec CounterSpec::from_block(const Block& b) noexcept {
  CounterSpec spec;
  std::copy_n(b.begin(), 8, spec.nonce.begin());
  for (int i = 8; i < 16; ++i) spec.initial_counter = (spec.initial_counter << 8) | b[i];
  return spec;
}

CounterSpec CounterSpec::generate(RandomSource& rng) {
  CounterSpec spec;
  rng.fill(spec.nonce);
  return spec;
}

AeadNonce::AeadNonce(ByteView octets) : octets_(octets.begin(), octets.end()) {
  if (octets_.size() < kMinLength || octets_.size() > kMaxLength) {
    throw Error(ErrorKind::InvalidNonce,
                "nonce must be 7..13 octets, got " + std::to_string(octets_.size()));
  }
}

AeadNonce AeadNonce::generate(RandomSource& rng, std::size_t length) {
  return AeadNonce(rng.bytes(length));
}

Bytes pad(ByteView data) {
  const std::size_t n = kBlockSize - data.size() % kBlockSize;
  Bytes out(data.begin(), data.end());
  out.insert(out.end(), n, static_cast<std::uint8_t>(n));
  return out;
}

Bytes unpad(ByteView data) {
  if (data.empty() || data.size() % kBlockSize != 0) {
    throw Error(ErrorKind::InvalidInput, "padded data must be a positive multiple of 16 octets");
  }
  const std::uint8_t n = data.back();
  if (n == 0 || n > kBlockSize) throw Error(ErrorKind::Padding, "bad padding length octet");
  std::uint8_t diff = 0;
  for (std::size_t i = data.size() - n; i < data.size(); ++i) diff |= data[i] ^ n;
  if (diff != 0) throw Error(ErrorKind::Padding, "inconsistent padding tail");
  return Bytes(data.begin(), data.end() - n);
}

void ecb_blocks(const RoundKeySchedule& sched, ByteView in, MutableByteView out, bool encrypt,
                Parallelism par) {
  const std::size_t blocks = in.size() / kBlockSize;
  for_each_range(blocks, par, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Block b = load_block(in, i * kBlockSize);
      store_block(out, i * kBlockSize, encrypt ? encrypt_block(sched, b) : decrypt_block(sched, b));
    }
  });
}

void ctr_xor(const RoundKeySchedule& sched, const CounterSpec& spec, ByteView in,
             MutableByteView out, Parallelism par) {
  const std::size_t blocks = (in.size() + kBlockSize - 1) / kBlockSize;
  for_each_range(blocks, par, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Block ks = encrypt_block(sched, spec.counter_block(i + 1));
      const std::size_t off = i * kBlockSize;
      const std::size_t len = std::min(kBlockSize, in.size() - off);
      for (std::size_t j = 0; j < len; ++j) out[off + j] = in[off + j] ^ ks[j];
    }
  });
}

SealedMessage ecb_encrypt(const SecretKey& key, ByteView plaintext, Parallelism par) {
  const auto sched = key_expand(key);
  SealedMessage msg{Mode::Ecb, key.variant(), std::monostate{}, pad(plaintext), std::nullopt};
  ecb_blocks(sched, msg.body, msg.body, true, par);
  return msg;
}

Bytes ecb_decrypt(const SecretKey& key, const SealedMessage& msg, Parallelism par) {
  expect_mode(msg, Mode::Ecb);
  expect_block_multiple(msg);
  const auto sched = key_expand(key);
  Bytes out(msg.body.size());
  ecb_blocks(sched, msg.body, out, false, par);
  return unpad(out);
}

SealedMessage cbc_encrypt(const SecretKey& key, ByteView plaintext, const InitialValue& iv) {
  const auto sched = key_expand(key);
  SealedMessage msg{Mode::Cbc, key.variant(), iv, pad(plaintext), std::nullopt};
  Block chain = iv.octets;
  for (std::size_t off = 0; off < msg.body.size(); off += kBlockSize) {
    chain = encrypt_block(sched, xor_blocks(load_block(msg.body, off), chain));
    store_block(msg.body, off, chain);
  }
  return msg;
}

SealedMessage cbc_encrypt(const SecretKey& key, ByteView plaintext, RandomSource& rng) {
  return cbc_encrypt(key, plaintext, InitialValue::generate(rng));
}

Bytes cbc_decrypt(const SecretKey& key, const SealedMessage& msg, Parallelism par) {
  expect_mode(msg, Mode::Cbc);
  const auto* iv = std::get_if<InitialValue>(&msg.header);
  if (!iv) throw Error(ErrorKind::Format, "CBC message carries no IV");
  expect_block_multiple(msg);
  const auto sched = key_expand(key);
  Bytes out(msg.body.size());
  const ByteView body = msg.body;
  // p_i depends only on c_i and c_{i-1}, so decryption splits freely.
  for_each_range(body.size() / kBlockSize, par, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Block prev = i == 0 ? iv->octets : load_block(body, (i - 1) * kBlockSize);
      const Block p = xor_blocks(decrypt_block(sched, load_block(body, i * kBlockSize)), prev);
      store_block(out, i * kBlockSize, p);
    }
  });
  return unpad(out);
}

SealedMessage ctr_encrypt(const SecretKey& key, ByteView plaintext, const CounterSpec& spec,
                          Parallelism par) {
  const auto sched = key_expand(key);
  SealedMessage msg{Mode::Ctr, key.variant(), spec, Bytes(plaintext.size()), std::nullopt};
  ctr_xor(sched, spec, plaintext, msg.body, par);
  return msg;
}

SealedMessage ctr_encrypt(const SecretKey& key, ByteView plaintext, RandomSource& rng,
                          Parallelism par) {
  return ctr_encrypt(key, plaintext, CounterSpec::generate(rng), par);
}

Bytes ctr_decrypt(const SecretKey& key, const SealedMessage& msg, Parallelism par) {
  expect_mode(msg, Mode::Ctr);
  const auto* spec = std::get_if<CounterSpec>(&msg.header);
  if (!spec) throw Error(ErrorKind::Format, "CTR message carries no counter block");
  const auto sched = key_expand(key);
  Bytes out(msg.body.size());
  ctr_xor(sched, *spec, msg.body, out, par);
  return out;
}

}  // namespace aeslab
