#pragma once

// Mode-generic entry points over the five modes.

#include "aeslab/aead.hpp"
#include "aeslab/modes.hpp"

namespace aeslab {

class RandomSource;

// Fresh IV / counter spec / 12-octet nonce for the mode (empty for ECB).
ModeHeader fresh_header(Mode mode, RandomSource& rng);

// Throws Error(InvalidInput) if header does not fit the mode. aad is ignored
// by the unauthenticated modes.
SealedMessage seal(Mode mode, const SecretKey& key, ByteView plaintext, const ModeHeader& header,
                   ByteView aad = {}, Parallelism par = {});

Bytes open(const SecretKey& key, const SealedMessage& msg, ByteView aad = {},
           Parallelism par = {});

}  // namespace aeslab
