#pragma once

// Authenticated modes. Both return SealedMessage with a 16-octet tag and the
// nonce in the header; both verify before releasing any plaintext.

#include "aeslab/bytes.hpp"
#include "aeslab/modes.hpp"
#include "aeslab/parallel.hpp"

namespace aeslab {

inline constexpr std::size_t kGcmNonceLength = 12;
inline constexpr std::size_t kTagLength = 16;

// J_0 = nonce || 00000001; the body uses counters from J_0 + 1 onwards.
Block gcm_pre_counter_block(const AeadNonce& nonce);
CounterSpec gcm_body_counter(const AeadNonce& nonce);

SealedMessage gcm_seal(const SecretKey& key, const AeadNonce& nonce, ByteView aad,
                       ByteView plaintext, Parallelism par = {});
Bytes gcm_open(const SecretKey& key, const SealedMessage& msg, ByteView aad,
               Parallelism par = {});

SealedMessage ccm_seal(const SecretKey& key, const AeadNonce& nonce, ByteView aad,
                       ByteView plaintext, Parallelism par = {});
Bytes ccm_open(const SecretKey& key, const SealedMessage& msg, ByteView aad,
               Parallelism par = {});

// Variable tag length (4, 6, ..., 16) exists only so the published CCM
// examples, which use short tags, can be checked. Not part of the public
// message API.
namespace ccm_vectors {

struct Output {
  Bytes ciphertext;
  Bytes tag;
};

Output seal(const RoundKeySchedule& sched, const AeadNonce& nonce, ByteView aad,
            ByteView plaintext, std::size_t tag_length);
Bytes open(const RoundKeySchedule& sched, const AeadNonce& nonce, ByteView aad,
           ByteView ciphertext, ByteView tag);

}  // namespace ccm_vectors

}  // namespace aeslab
