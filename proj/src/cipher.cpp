#include "aeslab/cipher.hpp"

#include <string>

#include "aeslab/error.hpp"
#include "aeslab/random.hpp"

namespace aeslab {

namespace {

template <class T>
const T& header_as(const ModeHeader& header, Mode mode) {
  const T* h = std::get_if<T>(&header);
  if (!h) {
    throw Error(ErrorKind::InvalidInput,
                "mode parameters do not match " + std::string(to_string(mode)));
  }
  return *h;
}

}  // namespace

ModeHeader fresh_header(Mode mode, RandomSource& rng) {
  switch (mode) {
    case Mode::Ecb: return std::monostate{};
    case Mode::Cbc: return InitialValue::generate(rng);
    case Mode::Ctr: return CounterSpec::generate(rng);
    case Mode::Ccm:
    case Mode::Gcm: return AeadNonce::generate(rng, kGcmNonceLength);
  }
  return std::monostate{};
}

SealedMessage seal(Mode mode, const SecretKey& key, ByteView plaintext, const ModeHeader& header,
                   ByteView aad, Parallelism par) {
  switch (mode) {
    case Mode::Ecb:
      header_as<std::monostate>(header, mode);
      return ecb_encrypt(key, plaintext, par);
    case Mode::Cbc:
      return cbc_encrypt(key, plaintext, header_as<InitialValue>(header, mode));
    case Mode::Ctr:
      return ctr_encrypt(key, plaintext, header_as<CounterSpec>(header, mode), par);
    case Mode::Ccm:
      return ccm_seal(key, header_as<AeadNonce>(header, mode), aad, plaintext, par);
    case Mode::Gcm:
      return gcm_seal(key, header_as<AeadNonce>(header, mode), aad, plaintext, par);
  }
  throw Error(ErrorKind::InvalidInput, "unknown mode");
}

Bytes open(const SecretKey& key, const SealedMessage& msg, ByteView aad, Parallelism par) {
  if (msg.key_variant != key.variant()) {
    throw Error(ErrorKind::InvalidKey, "message was sealed under " +
                                           std::string(to_string(msg.key_variant)) +
                                           ", key is " + std::string(to_string(key.variant())));
  }
  switch (msg.mode) {
    case Mode::Ecb: return ecb_decrypt(key, msg, par);
    case Mode::Cbc: return cbc_decrypt(key, msg, par);
    case Mode::Ctr: return ctr_decrypt(key, msg, par);
    case Mode::Ccm: return ccm_open(key, msg, aad, par);
    case Mode::Gcm: return gcm_open(key, msg, aad, par);
  }
  throw Error(ErrorKind::InvalidInput, "unknown mode");
}

}  // namespace aeslab
