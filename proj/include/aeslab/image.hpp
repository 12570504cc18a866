#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aeslab/bytes.hpp"
#include "aeslab/modes.hpp"

namespace aeslab {

// Row-major raster, `channels` interleaved octets per pixel.
struct RawImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t channels = 1;  // 1 grayscale, 3 RGB
  Bytes pixels;

  std::size_t raster_size() const noexcept {
    return static_cast<std::size_t>(width) * height * channels;
  }
  // Throws Error(Format) if the invariants do not hold.
  void validate() const;

  friend bool operator==(const RawImage&, const RawImage&) = default;
};

struct CorpusImage {
  std::string id;
  RawImage image;
};

// Binary PGM (P5) and PPM (P6) with maxval <= 255. Comments are allowed in
// the header. Throws Error(Format) for other formats, truncated rasters and
// absurd dimensions; Error(Io) if the file cannot be read.
RawImage parse_netpbm(ByteView file);
RawImage load_image(const std::filesystem::path& path);

// Encodes as P5 or P6 according to channels.
Bytes encode_netpbm(const RawImage& image);
// Always writes P6, replicating grayscale into three channels.
Bytes encode_ppm(const RawImage& image);
void write_file(const std::filesystem::path& path, ByteView data);

// Nine structured 256x256 images dominated by flat regions: flat field,
// framed field, shapes, glyph text, checkerboard, gradient band, ruled
// sheet, and two neutral RGB compositions. Same seed, same octets.
std::vector<CorpusImage> synth_corpus(std::uint64_t seed);

// Ciphertext body laid out with the template's dimensions: excess octets
// (padding, if any) are dropped, a short body is zero-filled.
RawImage render_cipher_image(const RawImage& templ, const SealedMessage& msg);

// (blocks - distinct blocks) / blocks over the complete 16-octet blocks.
// Zero for inputs shorter than one block.
double duplicate_block_fraction(ByteView data);

}  // namespace aeslab
