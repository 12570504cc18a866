#pragma once

#include <doctest.h>

#include "aeslab/aes.hpp"
#include "aeslab/error.hpp"

namespace support {

template <class Fn>
aeslab::ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const aeslab::Error& e) {
    return e.kind();
  }
  FAIL("no aeslab::Error thrown");
  return aeslab::ErrorKind::Io;
}

inline aeslab::Bytes prefix(const aeslab::Bytes& b, std::size_t n) {
  return {b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace support
