#include "aeslab/random.hpp"

#include <sys/random.h>

#include <cerrno>
#include <cstring>

#include "aeslab/error.hpp"

namespace aeslab {

RandomSource RandomSource::system() { return RandomSource{}; }

RandomSource RandomSource::seeded(std::uint64_t seed) {
  RandomSource src;
  src.engine_ = std::make_shared<std::mt19937_64>(seed);
  return src;
}

void RandomSource::fill(MutableByteView out) {
  if (engine_) {
    std::size_t i = 0;
    while (i < out.size()) {
      std::uint64_t word = (*engine_)();
      for (int k = 0; k < 8 && i < out.size(); ++k, ++i) {
        out[i] = static_cast<std::uint8_t>(word);
        word >>= 8;
      }
    }
    return;
  }
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t n = ::getrandom(out.data() + done, out.size() - done, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorKind::Io, std::string("getrandom failed: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

}  // namespace aeslab
