#include "aeslab/container.hpp"

#include <algorithm>
#include <string>

#include "aeslab/error.hpp"

namespace aeslab {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'A', 'E', 'S', 'L'};

Bytes header_octets(const ModeHeader& header) {
  return std::visit(
      [](const auto& h) -> Bytes {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, InitialValue>) {
          return Bytes(h.octets.begin(), h.octets.end());
        } else if constexpr (std::is_same_v<T, CounterSpec>) {
          const Block b = h.to_block();
          return Bytes(b.begin(), b.end());
        } else {
          return Bytes(h.octets().begin(), h.octets().end());
        }
      },
      header);
}

void put_be(Bytes& out, std::uint64_t v, int width) {
  for (int i = width - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

[[noreturn]] void bad(const std::string& why) {
  throw Error(ErrorKind::Format, "malformed container: " + why);
}

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  ByteView take(std::size_t n) {
    if (n > data_.size() - pos_) bad("truncated");
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint64_t be(int width) {
    std::uint64_t v = 0;
    for (auto b : take(static_cast<std::size_t>(width))) v = (v << 8) | b;
    return v;
  }

  bool done() const { return pos_ == data_.size(); }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

Block to_block(ByteView v) {
  Block b;
  std::copy(v.begin(), v.end(), b.begin());
  return b;
}

}  // namespace

Bytes serialize(const SealedMessage& msg) {
  const Bytes header = header_octets(msg.header);
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(msg.mode));
  out.push_back(static_cast<std::uint8_t>(key_length(msg.key_variant)));
  put_be(out, header.size(), 2);
  out.insert(out.end(), header.begin(), header.end());
  put_be(out, msg.body.size(), 8);
  out.insert(out.end(), msg.body.begin(), msg.body.end());
  if (msg.tag) {
    out.push_back(static_cast<std::uint8_t>(msg.tag->size()));
    out.insert(out.end(), msg.tag->begin(), msg.tag->end());
  } else {
    out.push_back(0);
  }
  return out;
}

SealedMessage deserialize(ByteView data) {
  Reader in(data);
  const ByteView magic = in.take(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) bad("bad magic");
  if (in.be(1) != kContainerVersion) bad("unsupported version");

  SealedMessage msg;
  const auto mode_octet = in.be(1);
  if (mode_octet < 1 || mode_octet > 5) bad("unknown mode " + std::to_string(mode_octet));
  msg.mode = static_cast<Mode>(mode_octet);
  const auto variant = variant_from_length(in.be(1));
  if (!variant) bad("unknown key length");
  msg.key_variant = *variant;

  const ByteView header = in.take(in.be(2));
  switch (msg.mode) {
    case Mode::Ecb:
      if (!header.empty()) bad("ECB takes no header");
      break;
    case Mode::Cbc:
      if (header.size() != kBlockSize) bad("CBC header must be a 16-octet IV");
      msg.header = InitialValue{to_block(header)};
      break;
    case Mode::Ctr:
      if (header.size() != kBlockSize) bad("CTR header must be a 16-octet counter block");
      msg.header = CounterSpec::from_block(to_block(header));
      break;
    case Mode::Ccm:
    case Mode::Gcm:
      try {
        msg.header = AeadNonce(header);
      } catch (const Error&) {
        bad("nonce length out of range");
      }
      break;
  }

  const std::uint64_t body_len = in.be(8);
  if (body_len > data.size()) bad("truncated");
  const ByteView body = in.take(static_cast<std::size_t>(body_len));
  msg.body.assign(body.begin(), body.end());
  if ((msg.mode == Mode::Ecb || msg.mode == Mode::Cbc) &&
      (msg.body.empty() || msg.body.size() % kBlockSize != 0)) {
    bad("block-mode body must be a positive multiple of 16 octets");
  }

  const auto tag_len = in.be(1);
  if (is_authenticated(msg.mode)) {
    if (tag_len != kBlockSize) bad("authenticated modes carry a 16-octet tag");
    msg.tag = to_block(in.take(kBlockSize));
  } else if (tag_len != 0) {
    bad("unauthenticated modes carry no tag");
  }
  if (!in.done()) bad("trailing octets");
  return msg;
}

}  // namespace aeslab
