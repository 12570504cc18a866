#pragma once

// Normalized Gini impurity of the bit difference between a plaintext and its
// ciphertext:
//
//   d  = P xor C             (over the overlapping prefix)
//   p1 = popcount(d) / L     (L = bit length of d)
//   g  = 2 - 2 (p1^2 + (1 - p1)^2)
//
// g is 1 when exactly half the bits differ and 0 when none or all do. Higher
// is better diffusion.

#include <cstdint>

#include "aeslab/bytes.hpp"
#include "aeslab/parallel.hpp"

namespace aeslab {

struct BitDiff {
  Bytes diff_octets;
  std::uint64_t bit_length = 0;
  std::uint64_t ones_count = 0;
};

struct NgiScore {
  double p1 = 0.0;
  double g = 0.0;
};

// Population count, eight octets at a time.
std::uint64_t popcount(ByteView data) noexcept;

// XOR over the first min(|plain|, |cipher|) octets. Error(InvalidInput) if
// either side is empty.
BitDiff xor_diff(ByteView plain, ByteView cipher);

double ones_ratio(const BitDiff& diff) noexcept;

// Error(Domain) unless 0 <= p1 <= 1.
double ngi(double p1);

// Same result as ngi(ones_ratio(xor_diff(plain, cipher))) without keeping the
// difference buffer around; the ones count is summed across workers.
NgiScore score(ByteView plain, ByteView cipher, Parallelism par = {});

}  // namespace aeslab
