#pragma once

// On-disk form of a SealedMessage. All integers big-endian.
//
//   offset  size  field
//   0       4     magic "AESL"
//   4       1     version (1)
//   5       1     mode (1 ECB, 2 CBC, 3 CTR, 4 CCM, 5 GCM)
//   6       1     key length in octets (16, 24, 32)
//   7       2     header length H
//   9       H     header: empty (ECB), IV (CBC), nonce||counter (CTR), nonce (CCM/GCM)
//   9+H     8     body length B
//   17+H    B     body
//   17+H+B  1     tag length T (0, or 16 for CCM/GCM)
//   18+H+B  T     tag

#include "aeslab/bytes.hpp"
#include "aeslab/modes.hpp"

namespace aeslab {

inline constexpr std::uint8_t kContainerVersion = 1;

Bytes serialize(const SealedMessage& msg);

// Throws Error(Format) on any structural problem: bad magic or version,
// unknown mode, header or tag inconsistent with the mode, trailing octets.
SealedMessage deserialize(ByteView data);

}  // namespace aeslab
