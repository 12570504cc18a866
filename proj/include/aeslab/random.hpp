#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "aeslab/bytes.hpp"

namespace aeslab {

// Source of keys, IVs and nonces. The system source reads the OS CSPRNG;
// the seeded source is deterministic and exists so evaluation runs and tests
// can be reproduced octet-for-octet. Never use the seeded source for real data.
class RandomSource {
 public:
  static RandomSource system();
  static RandomSource seeded(std::uint64_t seed);

  void fill(MutableByteView out);

  template <std::size_t N>
  std::array<std::uint8_t, N> array() {
    std::array<std::uint8_t, N> out{};
    fill(out);
    return out;
  }

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
  }

  bool is_deterministic() const noexcept { return engine_ != nullptr; }

 private:
  RandomSource() = default;
  std::shared_ptr<std::mt19937_64> engine_;
};

}  // namespace aeslab
