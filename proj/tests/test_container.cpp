#include <doctest.h>

#include "aeslab/cipher.hpp"
#include "aeslab/container.hpp"
#include "aeslab/random.hpp"
#include "support.hpp"

using namespace aeslab;
using support::error_kind;

TEST_CASE("exact layout") {
  SealedMessage msg;
  msg.mode = Mode::Gcm;
  msg.key_variant = KeyVariant::Aes192;
  msg.header = AeadNonce(from_hex("0102030405060708090a0b0c"));
  msg.body = from_hex("aabbcc");
  msg.tag = block_from_hex("000102030405060708090a0b0c0d0e0f");
  CHECK(to_hex(serialize(msg)) ==
        "4145534c"                   // magic
        "01"                         // version
        "05"                         // mode
        "18"                         // key length
        "000c"                       // header length
        "0102030405060708090a0b0c"   // nonce
        "0000000000000003"           // body length
        "aabbcc"
        "10"
        "000102030405060708090a0b0c0d0e0f");

  SealedMessage ecb;
  ecb.body = Bytes(16, 0xee);
  CHECK(to_hex(serialize(ecb)) ==
        "4145534c0101100000" "0000000000000010" + std::string(32, 'e') + "00");
}

TEST_CASE("round trip for every mode") {
  RandomSource rng = RandomSource::seeded(30);
  for (Mode m : kReportModeOrder) {
    for (KeyVariant v : kAllVariants) {
      const auto key = SecretKey::generate(v, rng);
      for (std::size_t n : {0u, 5u, 64u}) {
        const auto msg = seal(m, key, rng.bytes(n), fresh_header(m, rng));
        const Bytes wire = serialize(msg);
        CHECK(deserialize(wire) == msg);
      }
    }
  }
}

TEST_CASE("malformed containers are rejected") {
  RandomSource rng = RandomSource::seeded(31);
  const auto key = SecretKey::generate(KeyVariant::Aes128, rng);
  const Bytes gcm = serialize(seal(Mode::Gcm, key, rng.bytes(20), fresh_header(Mode::Gcm, rng)));
  const Bytes cbc = serialize(seal(Mode::Cbc, key, rng.bytes(20), fresh_header(Mode::Cbc, rng)));

  auto rejects = [](Bytes b) { return error_kind([&] { deserialize(b); }) == ErrorKind::Format; };

  CHECK(rejects({}));
  CHECK(rejects(Bytes(gcm.begin(), gcm.begin() + 8)));
  for (std::size_t cut = 1; cut < gcm.size(); cut += 3) {
    CHECK(rejects(Bytes(gcm.begin(), gcm.end() - static_cast<std::ptrdiff_t>(cut))));
  }

  Bytes b = gcm;
  b[0] = 'X';
  CHECK(rejects(b));
  b = gcm;
  b[4] = 2;
  CHECK(rejects(b));
  b = gcm;
  b[5] = 9;
  CHECK(rejects(b));
  b = gcm;
  b[6] = 20;
  CHECK(rejects(b));
  b = gcm;
  b.push_back(0);
  CHECK(rejects(b));
  b = gcm;
  b[b.size() - 17] = 0;  // tag length 0 on an authenticated mode
  CHECK(rejects(b));
  b = cbc;
  b[5] = 1;  // CBC header under an ECB mode octet
  CHECK(rejects(b));
  b = cbc;
  b[8] = 8;  // IV length 8
  CHECK(rejects(b));
}
