#include "aeslab/image.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <string_view>
#include <unordered_set>

#include "aeslab/error.hpp"

namespace aeslab {

namespace {

constexpr std::uint64_t kMaxRasterOctets = std::uint64_t{1} << 31;

[[noreturn]] void format_error(const std::string& why) {
  throw Error(ErrorKind::Format, "netpbm: " + why);
}

class HeaderReader {
 public:
  explicit HeaderReader(ByteView data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      const char c = static_cast<char>(data_[pos_]);
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') {
      v = v * 10 + (data_[pos_] - '0');
      if (v > kMaxRasterOctets) format_error(std::string(what) + " too large (dimension overflow)");
      ++pos_;
      ++digits;
    }
    if (digits == 0) format_error(std::string("missing ") + what);
    return v;
  }

  // Exactly one whitespace octet separates maxval from the raster.
  void single_space() {
    if (pos_ >= data_.size()) format_error("truncated header");
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

// A minimal 5x7 font for uppercase letters; each row is 5 bits, MSB left.
constexpr std::array<std::array<std::uint8_t, 7>, 26> kGlyphs = {{
    {0x0e, 0x11, 0x11, 0x1f, 0x11, 0x11, 0x11},  // A
    {0x1e, 0x11, 0x11, 0x1e, 0x11, 0x11, 0x1e},  // B
    {0x0e, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0e},  // C
    {0x1e, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1e},  // D
    {0x1f, 0x10, 0x10, 0x1e, 0x10, 0x10, 0x1f},  // E
    {0x1f, 0x10, 0x10, 0x1e, 0x10, 0x10, 0x10},  // F
    {0x0e, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0f},  // G
    {0x11, 0x11, 0x11, 0x1f, 0x11, 0x11, 0x11},  // H
    {0x0e, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0e},  // I
    {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0c},  // J
    {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11},  // K
    {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1f},  // L
    {0x11, 0x1b, 0x15, 0x15, 0x11, 0x11, 0x11},  // M
    {0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11},  // N
    {0x0e, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0e},  // O
    {0x1e, 0x11, 0x11, 0x1e, 0x10, 0x10, 0x10},  // P
    {0x0e, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0d},  // Q
    {0x1e, 0x11, 0x11, 0x1e, 0x14, 0x12, 0x11},  // R
    {0x0f, 0x10, 0x10, 0x0e, 0x01, 0x01, 0x1e},  // S
    {0x1f, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04},  // T
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0e},  // U
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x0a, 0x04},  // V
    {0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0a},  // W
    {0x11, 0x11, 0x0a, 0x04, 0x0a, 0x11, 0x11},  // X
    {0x11, 0x11, 0x0a, 0x04, 0x04, 0x04, 0x04},  // Y
    {0x1f, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1f},  // Z
}};

constexpr std::uint32_t kSide = 256;

// Canvas helpers. Colors are always given as RGB; grayscale canvases take
// the first component.
struct Canvas {
  RawImage img;

  Canvas(std::uint32_t channels, std::array<std::uint8_t, 3> background) {
    img.width = kSide;
    img.height = kSide;
    img.channels = channels;
    img.pixels.resize(img.raster_size());
    fill_rect(0, 0, kSide, kSide, background);
  }

  void put(std::int64_t x, std::int64_t y, std::array<std::uint8_t, 3> c) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
    const std::size_t at = (static_cast<std::size_t>(y) * img.width + static_cast<std::size_t>(x)) *
                           img.channels;
    for (std::uint32_t k = 0; k < img.channels; ++k) img.pixels[at + k] = c[k];
  }

  void fill_rect(std::int64_t x0, std::int64_t y0, std::int64_t w, std::int64_t h,
                 std::array<std::uint8_t, 3> c) {
    for (std::int64_t y = y0; y < y0 + h; ++y)
      for (std::int64_t x = x0; x < x0 + w; ++x) put(x, y, c);
  }

  void fill_disc(std::int64_t cx, std::int64_t cy, std::int64_t r, std::array<std::uint8_t, 3> c) {
    for (std::int64_t y = cy - r; y <= cy + r; ++y)
      for (std::int64_t x = cx - r; x <= cx + r; ++x)
        if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) put(x, y, c);
  }

  void glyph(char ch, std::int64_t x0, std::int64_t y0, std::int64_t scale,
             std::array<std::uint8_t, 3> c) {
    if (ch < 'A' || ch > 'Z') return;
    const auto& rows = kGlyphs[static_cast<std::size_t>(ch - 'A')];
    for (std::int64_t r = 0; r < 7; ++r)
      for (std::int64_t col = 0; col < 5; ++col)
        if (rows[static_cast<std::size_t>(r)] & (0x10 >> col))
          fill_rect(x0 + col * scale, y0 + r * scale, scale, scale, c);
  }
};

std::array<std::uint8_t, 3> gray(std::uint32_t v) {
  const auto g = static_cast<std::uint8_t>(v);
  return {g, g, g};
}

}  // namespace

void RawImage::validate() const {
  if (width == 0 || height == 0) format_error("width and height must be at least 1");
  if (channels != 1 && channels != 3) format_error("channels must be 1 or 3");
  if (pixels.size() != raster_size()) format_error("pixel buffer does not match dimensions");
}

RawImage parse_netpbm(ByteView file) {
  if (file.size() < 2 || file[0] != 'P' || (file[1] != '5' && file[1] != '6')) {
    format_error("unsupported format (only binary P5 and P6 are accepted)");
  }
  RawImage img;
  img.channels = file[1] == '5' ? 1 : 3;
  HeaderReader hdr(file);
  hdr.advance(2);
  const auto width = hdr.number("width");
  const auto height = hdr.number("height");
  const auto maxval = hdr.number("maxval");
  hdr.single_space();
  if (width == 0 || height == 0) format_error("zero dimension");
  if (maxval == 0 || maxval > 255) format_error("unsupported maxval (only 1..255)");
  if (width * height > kMaxRasterOctets / img.channels) format_error("dimension overflow");
  img.width = static_cast<std::uint32_t>(width);
  img.height = static_cast<std::uint32_t>(height);
  const std::size_t need = img.raster_size();
  if (file.size() - hdr.pos() < need) {
    format_error("truncated raster: need " + std::to_string(need) + " octets, have " +
                 std::to_string(file.size() - hdr.pos()));
  }
  img.pixels.assign(file.begin() + static_cast<std::ptrdiff_t>(hdr.pos()),
                    file.begin() + static_cast<std::ptrdiff_t>(hdr.pos() + need));
  return img;
}

RawImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  const Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_netpbm(data);
}

Bytes encode_netpbm(const RawImage& image) {
  image.validate();
  const std::string header = std::string(image.channels == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(image.width) + " " + std::to_string(image.height) +
                             "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

Bytes encode_ppm(const RawImage& image) {
  if (image.channels == 3) return encode_netpbm(image);
  image.validate();
  RawImage rgb{image.width, image.height, 3, {}};
  rgb.pixels.reserve(rgb.raster_size());
  for (auto v : image.pixels) rgb.pixels.insert(rgb.pixels.end(), 3, v);
  return encode_netpbm(rgb);
}

void write_file(const std::filesystem::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
}

std::vector<CorpusImage> synth_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Modulo reduction rather than std::uniform_int_distribution, whose output
  // is not specified across standard libraries.
  auto pick = [&rng](std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(rng() % (hi - lo + 1));
  };
  std::vector<CorpusImage> corpus;

  {
    Canvas c(1, gray(pick(24, 232)));
    corpus.push_back({"flat", std::move(c.img)});
  }
  {
    Canvas c(1, gray(pick(16, 96)));
    const auto edge = gray(pick(160, 255));
    const std::int64_t t = 4;
    c.fill_rect(0, 0, kSide, t, edge);
    c.fill_rect(0, kSide - t, kSide, t, edge);
    c.fill_rect(0, 0, t, kSide, edge);
    c.fill_rect(kSide - t, 0, t, kSide, edge);
    corpus.push_back({"frame", std::move(c.img)});
  }
  {
    Canvas c(1, gray(pick(200, 255)));
    c.fill_disc(pick(60, 100), pick(60, 100), pick(24, 36), gray(pick(0, 60)));
    c.fill_rect(pick(140, 180), pick(140, 180), pick(32, 48), pick(32, 48), gray(pick(60, 140)));
    corpus.push_back({"shapes", std::move(c.img)});
  }
  {
    Canvas c(1, gray(255));
    const auto ink = gray(pick(0, 48));
    const std::int64_t lines = 4;
    for (std::int64_t line = 0; line < lines; ++line) {
      const std::int64_t y = 24 + line * 56;
      for (std::int64_t k = 0; k < 12; ++k) {
        c.glyph(static_cast<char>('A' + pick(0, 25)), 16 + k * 19, y, 2, ink);
      }
    }
    corpus.push_back({"glyphs", std::move(c.img)});
  }
  {
    const auto a = gray(pick(0, 64));
    const auto b = gray(pick(192, 255));
    Canvas c(1, a);
    const std::int64_t cell = 64;
    for (std::int64_t y = 0; y < kSide; y += cell)
      for (std::int64_t x = 0; x < kSide; x += cell)
        if (((x + y) / cell) % 2 == 1) c.fill_rect(x, y, cell, cell, b);
    corpus.push_back({"checker", std::move(c.img)});
  }
  {
    Canvas c(1, gray(pick(100, 160)));
    const std::int64_t y0 = pick(16, 200);
    for (std::int64_t x = 0; x < kSide; ++x) c.fill_rect(x, y0, 1, 32, gray(static_cast<std::uint32_t>(x)));
    corpus.push_back({"gradient", std::move(c.img)});
  }
  {
    Canvas c(1, gray(pick(224, 255)));
    const auto rule = gray(pick(96, 160));
    for (std::int64_t y = 16; y < kSide; y += 32) c.fill_rect(0, y, kSide, 1, rule);
    corpus.push_back({"ruled", std::move(c.img)});
  }
  {
    Canvas c(3, gray(255));
    c.fill_disc(pick(90, 166), pick(90, 166), pick(30, 44), gray(pick(0, 40)));
    c.fill_rect(pick(8, 40), pick(180, 210), 96, 24, gray(pick(90, 170)));
    corpus.push_back({"rgb_emblem", std::move(c.img)});
  }
  {
    Canvas c(3, gray(pick(32, 200)));
    const std::array<std::uint8_t, 3> badge = {static_cast<std::uint8_t>(pick(150, 255)),
                                               static_cast<std::uint8_t>(pick(0, 80)),
                                               static_cast<std::uint8_t>(pick(0, 120))};
    c.fill_rect(pick(80, 120), pick(80, 120), 48, 40, badge);
    corpus.push_back({"rgb_badge", std::move(c.img)});
  }
  return corpus;
}

RawImage render_cipher_image(const RawImage& templ, const SealedMessage& msg) {
  RawImage out{templ.width, templ.height, templ.channels, Bytes(templ.raster_size(), 0)};
  const std::size_t n = std::min(out.pixels.size(), msg.body.size());
  std::copy_n(msg.body.begin(), n, out.pixels.begin());
  return out;
}

double duplicate_block_fraction(ByteView data) {
  const std::size_t blocks = data.size() / kBlockSize;
  if (blocks == 0) return 0.0;
  struct BlockHash {
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_set<std::string_view, BlockHash> seen;
  seen.reserve(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    seen.emplace(reinterpret_cast<const char*>(data.data()) + i * kBlockSize, kBlockSize);
  }
  return static_cast<double>(blocks - seen.size()) / static_cast<double>(blocks);
}

}  // namespace aeslab
