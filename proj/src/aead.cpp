#include "aeslab/aead.hpp"

#include <algorithm>
#include <string>

#include "aeslab/error.hpp"
#include "aeslab/gf128.hpp"

namespace aeslab {

namespace {

const AeadNonce& nonce_of(const SealedMessage& msg, Mode mode) {
  if (msg.mode != mode) {
    throw Error(ErrorKind::ModeMismatch, "expected " + std::string(to_string(mode)) +
                                             " message, got " + std::string(to_string(msg.mode)));
  }
  const auto* nonce = std::get_if<AeadNonce>(&msg.header);
  if (!nonce) throw Error(ErrorKind::Format, "message carries no nonce");
  if (!msg.tag) throw Error(ErrorKind::Format, "message carries no tag");
  return *nonce;
}

void check_gcm_nonce(const AeadNonce& nonce) {
  if (nonce.size() != kGcmNonceLength) {
    throw Error(ErrorKind::InvalidNonce,
                "GCM nonce must be 12 octets, got " + std::to_string(nonce.size()));
  }
}

void check_gcm_length(std::size_t n) {
  // 2^39 - 256 bits.
  if (static_cast<std::uint64_t>(n) > (std::uint64_t{1} << 36) - 32) {
    throw Error(ErrorKind::MessageTooLong, "GCM plaintext exceeds 2^36 - 32 octets");
  }
}

Block gcm_tag(const RoundKeySchedule& sched, const AeadNonce& nonce, ByteView aad,
              ByteView ciphertext) {
  const GhashKey hkey = GhashKey::derive(sched);
  const Block s = ghash(hkey, aad, ciphertext);
  return xor_blocks(s, encrypt_block(sched, gcm_pre_counter_block(nonce)));
}

// --- CCM formatting ---------------------------------------------------------

std::size_t ccm_q(const AeadNonce& nonce) { return 15 - nonce.size(); }

void check_ccm_params(const AeadNonce& nonce, std::size_t payload, std::size_t tag_length) {
  if (tag_length < 4 || tag_length > 16 || tag_length % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, "CCM tag length must be even and within 4..16");
  }
  const std::size_t q = ccm_q(nonce);
  if (q < 8 && static_cast<std::uint64_t>(payload) >= (std::uint64_t{1} << (8 * q))) {
    throw Error(ErrorKind::MessageTooLong,
                "payload length does not fit the " + std::to_string(q) + "-octet length field");
  }
}

// A_i = flags || N || [i]_q, expressed as a CounterSpec starting at A_1.
// The q-octet counter never overflows for a payload that passed
// check_ccm_params, so a 64-bit increment over the low half is equivalent.
CounterSpec ccm_counter(const AeadNonce& nonce, std::uint64_t first) {
  Block a{};
  a[0] = static_cast<std::uint8_t>(ccm_q(nonce) - 1);
  std::copy(nonce.octets().begin(), nonce.octets().end(), a.begin() + 1);
  CounterSpec spec = CounterSpec::from_block(a);
  spec.initial_counter += first;
  return spec;
}

Block ccm_mac(const RoundKeySchedule& sched, const AeadNonce& nonce, ByteView aad,
              ByteView plaintext, std::size_t tag_length) {
  const std::size_t q = ccm_q(nonce);
  Block b0{};
  b0[0] = static_cast<std::uint8_t>((aad.empty() ? 0 : 0x40) | (((tag_length - 2) / 2) << 3) |
                                    (q - 1));
  std::copy(nonce.octets().begin(), nonce.octets().end(), b0.begin() + 1);
  std::uint64_t len = plaintext.size();
  for (std::size_t i = 0; i < q; ++i) {
    b0[15 - i] = static_cast<std::uint8_t>(len);
    len >>= 8;
  }

  Block mac = encrypt_block(sched, b0);
  auto absorb = [&](ByteView data) {
    for (std::size_t off = 0; off < data.size(); off += kBlockSize) {
      const std::size_t n = std::min(kBlockSize, data.size() - off);
      for (std::size_t j = 0; j < n; ++j) mac[j] ^= data[off + j];
      mac = encrypt_block(sched, mac);
    }
  };

  if (!aad.empty()) {
    Bytes encoded;
    const std::uint64_t a = aad.size();
    if (a < 0xff00) {
      encoded = {static_cast<std::uint8_t>(a >> 8), static_cast<std::uint8_t>(a)};
    } else if (a <= 0xffffffffULL) {
      encoded = {0xff, 0xfe};
      for (int s = 24; s >= 0; s -= 8) encoded.push_back(static_cast<std::uint8_t>(a >> s));
    } else {
      encoded = {0xff, 0xff};
      for (int s = 56; s >= 0; s -= 8) encoded.push_back(static_cast<std::uint8_t>(a >> s));
    }
    encoded.insert(encoded.end(), aad.begin(), aad.end());
    absorb(encoded);
  }
  absorb(plaintext);
  return mac;
}

Block ccm_tag_mask(const RoundKeySchedule& sched, const AeadNonce& nonce) {
  return encrypt_block(sched, ccm_counter(nonce, 0).to_block());
}

}  // namespace

Block gcm_pre_counter_block(const AeadNonce& nonce) {
  check_gcm_nonce(nonce);
  Block j0{};
  std::copy(nonce.octets().begin(), nonce.octets().end(), j0.begin());
  j0[15] = 0x01;
  return j0;
}

CounterSpec gcm_body_counter(const AeadNonce& nonce) {
  // The low 32 bits start at 2 and a valid message needs at most 2^32 - 2
  // blocks, so the 64-bit counter never carries into the nonce: identical
  // to GCM's 32-bit increment.
  CounterSpec spec = CounterSpec::from_block(gcm_pre_counter_block(nonce));
  spec.initial_counter += 1;
  return spec;
}

SealedMessage gcm_seal(const SecretKey& key, const AeadNonce& nonce, ByteView aad,
                       ByteView plaintext, Parallelism par) {
  check_gcm_nonce(nonce);
  check_gcm_length(plaintext.size());
  const auto sched = key_expand(key);
  SealedMessage msg{Mode::Gcm, key.variant(), nonce, Bytes(plaintext.size()), std::nullopt};
  ctr_xor(sched, gcm_body_counter(nonce), plaintext, msg.body, par);
  msg.tag = gcm_tag(sched, nonce, aad, msg.body);
  return msg;
}

Bytes gcm_open(const SecretKey& key, const SealedMessage& msg, ByteView aad, Parallelism par) {
  const AeadNonce& nonce = nonce_of(msg, Mode::Gcm);
  check_gcm_nonce(nonce);
  check_gcm_length(msg.body.size());
  const auto sched = key_expand(key);
  const Block expected = gcm_tag(sched, nonce, aad, msg.body);
  if (!equal_all_octets(view(expected), view(*msg.tag))) {
    throw Error(ErrorKind::AuthenticationFailed, "GCM authentication failure: tag mismatch");
  }
  Bytes out(msg.body.size());
  ctr_xor(sched, gcm_body_counter(nonce), msg.body, out, par);
  return out;
}

namespace ccm_vectors {

Output seal(const RoundKeySchedule& sched, const AeadNonce& nonce, ByteView aad,
            ByteView plaintext, std::size_t tag_length) {
  check_ccm_params(nonce, plaintext.size(), tag_length);
  Output out{Bytes(plaintext.size()), Bytes(tag_length)};
  const Block t = xor_blocks(ccm_mac(sched, nonce, aad, plaintext, tag_length),
                             ccm_tag_mask(sched, nonce));
  std::copy_n(t.begin(), tag_length, out.tag.begin());
  ctr_xor(sched, ccm_counter(nonce, 1), plaintext, out.ciphertext, Parallelism::serial());
  return out;
}

Bytes open(const RoundKeySchedule& sched, const AeadNonce& nonce, ByteView aad,
           ByteView ciphertext, ByteView tag) {
  check_ccm_params(nonce, ciphertext.size(), tag.size());
  Bytes plain(ciphertext.size());
  ctr_xor(sched, ccm_counter(nonce, 1), ciphertext, plain, Parallelism::serial());
  const Block t = xor_blocks(ccm_mac(sched, nonce, aad, plain, tag.size()),
                             ccm_tag_mask(sched, nonce));
  if (!equal_all_octets(ByteView(t.data(), tag.size()), tag)) {
    std::fill(plain.begin(), plain.end(), 0);
    throw Error(ErrorKind::AuthenticationFailed, "CCM authentication failure: tag mismatch");
  }
  return plain;
}

}  // namespace ccm_vectors

SealedMessage ccm_seal(const SecretKey& key, const AeadNonce& nonce, ByteView aad,
                       ByteView plaintext, Parallelism par) {
  check_ccm_params(nonce, plaintext.size(), kTagLength);
  const auto sched = key_expand(key);
  SealedMessage msg{Mode::Ccm, key.variant(), nonce, Bytes(plaintext.size()), std::nullopt};
  msg.tag = xor_blocks(ccm_mac(sched, nonce, aad, plaintext, kTagLength),
                       ccm_tag_mask(sched, nonce));
  ctr_xor(sched, ccm_counter(nonce, 1), plaintext, msg.body, par);
  return msg;
}

Bytes ccm_open(const SecretKey& key, const SealedMessage& msg, ByteView aad, Parallelism par) {
  const AeadNonce& nonce = nonce_of(msg, Mode::Ccm);
  check_ccm_params(nonce, msg.body.size(), kTagLength);
  const auto sched = key_expand(key);
  Bytes plain(msg.body.size());
  ctr_xor(sched, ccm_counter(nonce, 1), msg.body, plain, par);
  const Block expected = xor_blocks(ccm_mac(sched, nonce, aad, plain, kTagLength),
                                    ccm_tag_mask(sched, nonce));
  if (!equal_all_octets(view(expected), view(*msg.tag))) {
    std::fill(plain.begin(), plain.end(), 0);
    throw Error(ErrorKind::AuthenticationFailed, "CCM authentication failure: tag mismatch");
  }
  return plain;
}

}  // namespace aeslab
