#include <doctest.h>

#include "aeslab/aes.hpp"
#include "aeslab/gf128.hpp"
#include "oracles.hpp"

using namespace aeslab;

namespace {

Block mul_reference(const Block& a, const Block& b) {
  return gf128_mul_reference(Gf128::from_block(a), Gf128::from_block(b)).to_block();
}

Block mul_table(const Block& a, const Block& b) {
  return GhashKey(b).multiply(Gf128::from_block(a)).to_block();
}

const Block kOne = block_from_hex("80000000000000000000000000000000");

}  // namespace

TEST_CASE("block conversion round trips") {
  oracle::Gen gen(10);
  for (int i = 0; i < 100; ++i) {
    const Block b = gen.block();
    CHECK(Gf128::from_block(b).to_block() == b);
  }
  CHECK(Gf128::from_block(kOne).hi == 0x8000000000000000ULL);
}

TEST_CASE("multiplication identities") {
  oracle::Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const Block a = gen.block();
    CHECK(mul_reference(a, kOne) == a);
    CHECK(mul_table(a, kOne) == a);
    CHECK(mul_reference(a, Block{}) == Block{});
    CHECK(mul_table(a, Block{}) == Block{});
  }
  // x * x^127 = x^128 = x^7 + x^2 + x + 1
  const Block x = block_from_hex("40000000000000000000000000000000");
  const Block x127 = block_from_hex("00000000000000000000000000000001");
  CHECK(to_hex(view(mul_reference(x, x127))) == "e1000000000000000000000000000000");
}

TEST_CASE("reference multiply agrees with schoolbook polynomial product") {
  oracle::Gen gen(12);
  for (int i = 0; i < 10000; ++i) {
    const Block a = gen.block();
    const Block b = gen.block();
    REQUIRE(mul_reference(a, b) == oracle::gf128_mul(a, b));
  }
}

TEST_CASE("table multiply agrees with reference multiply") {
  oracle::Gen gen(13);
  for (int i = 0; i < 10000; ++i) {
    const Block a = gen.block();
    const Block b = gen.block();
    REQUIRE(mul_table(a, b) == mul_reference(a, b));
  }
}

TEST_CASE("GHASH") {
  const Block h = block_from_hex("66e94bd4ef8a2c3b884cfa59ca342b2e");
  const GhashKey key(h);

  CHECK(ghash(key, {}, {}) == Block{});
  const Bytes c = from_hex("0388dace60b6a392f328c2b971b2fe78");
  CHECK(to_hex(view(ghash(key, {}, c))) == "f38cbb1ad69223dcc3457ae5b6b0f885");
  CHECK(to_hex(view(ghash_reference(h, {}, c))) == "f38cbb1ad69223dcc3457ae5b6b0f885");

  CHECK(GhashKey::derive(key_expand(SecretKey::from_hex("00000000000000000000000000000000")))
            .subkey() == h);

  SUBCASE("table and reference folds agree on ragged lengths") {
    oracle::Gen gen(14);
    for (int i = 0; i < 200; ++i) {
      const Bytes aad = gen.bytes(gen.below(70));
      const Bytes ct = gen.bytes(gen.below(70));
      const Block sub = gen.block();
      CHECK(ghash(GhashKey(sub), aad, ct) == ghash_reference(sub, aad, ct));
    }
  }

  SUBCASE("linear in the data for a fixed length") {
    oracle::Gen gen(15);
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = gen.below(100);
      const Bytes a = gen.bytes(n);
      const Bytes b = gen.bytes(n);
      Bytes ab(n);
      for (std::size_t j = 0; j < n; ++j) ab[j] = a[j] ^ b[j];
      const GhashKey k(gen.block());
      CHECK(xor_blocks(ghash(k, {}, ab), ghash(k, {}, Bytes(n, 0))) ==
            xor_blocks(ghash(k, {}, a), ghash(k, {}, b)));
    }
  }
}
