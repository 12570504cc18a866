#include "aeslab/vectors.hpp"

#include <functional>

#include "aeslab/aead.hpp"
#include "aeslab/aes.hpp"
#include "aeslab/error.hpp"
#include "aeslab/modes.hpp"

namespace aeslab {

namespace {

constexpr const char* kSp800_38aPlain =
    "6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51"
    "30c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710";

struct ModeVector {
  const char* name;
  const char* key;
  const char* ecb;
  const char* cbc;
  const char* ctr;
};

constexpr ModeVector kModeVectors[] = {
    {"AES-128", "2b7e151628aed2a6abf7158809cf4f3c",
     "3ad77bb40d7a3660a89ecaf32466ef97f5d3d58503b9699de785895a96fdbaaf"
     "43b1cd7f598ece23881b00e3ed0306887b0c785e27e8ad3f8223207104725dd4",
     "7649abac8119b246cee98e9b12e9197d5086cb9b507219ee95db113a917678b2"
     "73bed6b8e3c1743b7116e69e222295163ff1caa1681fac09120eca307586e1a7",
     "874d6191b620e3261bef6864990db6ce9806f66b7970fdff8617187bb9fffdff"
     "5ae4df3edbd5d35e5b4f09020db03eab1e031dda2fbe03d1792170a0f3009cee"},
    {"AES-192", "8e73b0f7da0e6452c810f32b809079e562f8ead2522c6b7b",
     "bd334f1d6e45f25ff712a214571fa5cc974104846d0ad3ad7734ecb3ecee4eef"
     "ef7afd2270e2e60adce0ba2face6444e9a4b41ba738d6c72fb16691603c18e0e",
     "4f021db243bc633d7178183a9fa071e8b4d9ada9ad7dedf4e5e738763f69145a"
     "571b242012fb7ae07fa9baac3df102e008b0e27988598881d920a9e64f5615cd",
     "1abc932417521ca24f2b0459fe7e6e0b090339ec0aa6faefd5ccc2c6f4ce8e94"
     "1e36b26bd1ebc670d1bd1d665620abf74f78a7f6d29809585a97daec58c6b050"},
    {"AES-256", "603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4",
     "f3eed1bdb5d2a03c064b5a7e3db181f8591ccb10d410ed26dc5ba74a31362870"
     "b6ed21b99ca6f4f9f153e7b1beafed1d23304b7a39f9f3ff067d8d8f9e24ecc7",
     "f58c4c04d6e5f1ba779eabfb5f7bfbd69cfc4e967edb808d679f777bc6702c7d"
     "39f23369a9d9bacfa530e26304231461b2eb05e2c39be9fcda6c19078c6a9d1b",
     "601ec313775789a5b7a7f504bbf3d228f443e3ca4d62b59aca84e990cacaf5c5"
     "2b0930daa23de94ce87017ba2d84988ddfc9c58db67aada613c2dd08457941a6"},
};

struct GcmVector {
  const char* name;
  const char* key;
  const char* nonce;
  const char* aad;
  const char* plain;
  const char* cipher;
  const char* tag;
};

constexpr const char* kGcmKey = "feffe9928665731c6d6a8f9467308308";
constexpr const char* kGcmNonce = "cafebabefacedbaddecaf888";
constexpr const char* kGcmAad = "feedfacedeadbeeffeedfacedeadbeefabaddad2";
constexpr const char* kGcmPlain =
    "d9313225f88406e5a55909c5aff5269a86a7a9531534f7da2e4c303d8a318a72"
    "1c3c0c95956809532fcf0e2449a6b525b16aedf5aa0de657ba637b39";

constexpr GcmVector kGcmVectors[] = {
    {"GCM test case 1 (AES-128, empty)", "00000000000000000000000000000000",
     "000000000000000000000000", "", "", "", "58e2fccefa7e3061367f1d57a4e7455a"},
    {"GCM test case 2 (AES-128, one zero block)", "00000000000000000000000000000000",
     "000000000000000000000000", "", "00000000000000000000000000000000",
     "0388dace60b6a392f328c2b971b2fe78", "ab6e47d42cec13bdf53a67b21257bddf"},
    {"GCM test case 4 (AES-128, AAD)", kGcmKey, kGcmNonce, kGcmAad, kGcmPlain,
     "42831ec2217774244b7221b784d0d49ce3aa212f2c02a4e035c17e2329aca12e"
     "21d514b25466931c7d8f6a5aac84aa051ba30b396a0aac973d58e091",
     "5bc94fbc3221a5db94fae95ae7121a47"},
    {"GCM test case 13 (AES-256, empty)",
     "0000000000000000000000000000000000000000000000000000000000000000",
     "000000000000000000000000", "", "", "", "530f8afbc74536b9a963b4f1c4cb738b"},
    {"GCM test case 16 (AES-256, AAD)",
     "feffe9928665731c6d6a8f9467308308feffe9928665731c6d6a8f9467308308", kGcmNonce, kGcmAad,
     kGcmPlain,
     "522dc1f099567d07f47f37a32a84427d643a8cdcbfe5c0c97598a2bd2555d1aa"
     "8cb08e48590dbb3da7b08b1056828838c5f61e6393ba7a0abcc9f662",
     "76fc6ece0f4e1768cddf8853bb2d551b"},
};

struct CcmVector {
  const char* name;
  const char* nonce;
  const char* aad;
  const char* plain;
  const char* cipher;
  const char* tag;
};

constexpr const char* kCcmKey = "404142434445464748494a4b4c4d4e4f";

constexpr CcmVector kCcmVectors[] = {
    {"SP 800-38C example 1", "10111213141516", "0001020304050607", "20212223", "7162015b",
     "4dac255d"},
    {"SP 800-38C example 2", "1011121314151617", "000102030405060708090a0b0c0d0e0f",
     "202122232425262728292a2b2c2d2e2f", "d2a1f0e051ea5f62081a7792073d593d", "1fc64fbfaccd"},
    {"SP 800-38C example 3", "101112131415161718191a1b",
     "000102030405060708090a0b0c0d0e0f10111213",
     "202122232425262728292a2b2c2d2e2f3031323334353637",
     "e3b201a9f5b71a7a9b1ceaeccd97e70b6176aad9a4428aa5", "484392fbc1b09951"},
};

class Suite {
 public:
  void check(std::string name, const std::function<std::string()>& actual,
             const std::string& expected) {
    VectorResult r{std::move(name), false, {}};
    try {
      const std::string got = actual();
      r.passed = got == expected;
      if (!r.passed) r.detail = "expected " + expected + ", got " + got;
    } catch (const std::exception& e) {
      r.detail = std::string("threw: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<VectorResult> take() { return std::move(results_); }

 private:
  std::vector<VectorResult> results_;
};

std::string concat(const SealedMessage& m) {
  std::string out = to_hex(m.body);
  if (m.tag) out += to_hex(view(*m.tag));
  return out;
}

}  // namespace

std::vector<VectorResult> run_known_answer_suite() {
  Suite suite;

  // FIPS-197 Appendix C.
  const struct {
    const char* name;
    const char* key;
    const char* cipher;
  } fips[] = {
      {"FIPS-197 C.1 AES-128", "000102030405060708090a0b0c0d0e0f",
       "69c4e0d86a7b0430d8cdb78070b4c55a"},
      {"FIPS-197 C.2 AES-192", "000102030405060708090a0b0c0d0e0f1011121314151617",
       "dda97ca4864cdfe06eaf70a0ec0d7191"},
      {"FIPS-197 C.3 AES-256",
       "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
       "8ea2b7ca516745bfeafc49904b496089"},
  };
  const char* fips_plain = "00112233445566778899aabbccddeeff";
  for (const auto& v : fips) {
    suite.check(std::string(v.name) + " encrypt", [&] {
      const auto sched = key_expand(SecretKey::from_hex(v.key));
      return to_hex(view(encrypt_block(sched, block_from_hex(fips_plain))));
    }, v.cipher);
    suite.check(std::string(v.name) + " decrypt", [&] {
      const auto sched = key_expand(SecretKey::from_hex(v.key));
      return to_hex(view(decrypt_block(sched, block_from_hex(v.cipher))));
    }, fips_plain);
  }

  suite.check("AES-128 all-zero key, round key 1", [] {
    const auto sched = key_expand(SecretKey::from_hex("00000000000000000000000000000000"));
    return to_hex(view(sched[1]));
  }, "62636363626363636263636362636363");

  // SP 800-38A. The four plaintext blocks are processed without padding,
  // so these go through the raw block paths rather than the padded API.
  const Bytes plain = from_hex(kSp800_38aPlain);
  const Block iv = block_from_hex("000102030405060708090a0b0c0d0e0f");
  const Block ctr0 = block_from_hex("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff");
  for (const auto& v : kModeVectors) {
    const std::string name = v.name;
    suite.check("SP 800-38A ECB " + name + " encrypt", [&] {
      const auto sched = key_expand(SecretKey::from_hex(v.key));
      Bytes out(plain.size());
      ecb_blocks(sched, plain, out, true, Parallelism::serial());
      return to_hex(out);
    }, v.ecb);
    suite.check("SP 800-38A ECB " + name + " decrypt", [&] {
      const auto sched = key_expand(SecretKey::from_hex(v.key));
      const Bytes c = from_hex(v.ecb);
      Bytes out(c.size());
      ecb_blocks(sched, c, out, false, Parallelism::serial());
      return to_hex(out);
    }, kSp800_38aPlain);
    suite.check("SP 800-38A CBC " + name + " encrypt", [&] {
      // Padded API; the extra padding block is dropped before comparing.
      const auto msg = cbc_encrypt(SecretKey::from_hex(v.key), plain, InitialValue{iv});
      return to_hex(ByteView(msg.body).first(plain.size()));
    }, v.cbc);
    suite.check("SP 800-38A CBC " + name + " decrypt", [&] {
      const SecretKey key = SecretKey::from_hex(v.key);
      // Re-seal to get the trailing padding block, then decrypt through the API.
      auto msg = cbc_encrypt(key, plain, InitialValue{iv});
      const Bytes c = from_hex(v.cbc);
      std::copy(c.begin(), c.end(), msg.body.begin());
      return to_hex(cbc_decrypt(key, msg));
    }, kSp800_38aPlain);
    suite.check("SP 800-38A CTR " + name + " encrypt", [&] {
      return to_hex(
          ctr_encrypt(SecretKey::from_hex(v.key), plain, CounterSpec::from_block(ctr0)).body);
    }, v.ctr);
    suite.check("SP 800-38A CTR " + name + " decrypt", [&] {
      const SecretKey key = SecretKey::from_hex(v.key);
      SealedMessage msg{Mode::Ctr, key.variant(), CounterSpec::from_block(ctr0), from_hex(v.ctr),
                        std::nullopt};
      return to_hex(ctr_decrypt(key, msg));
    }, kSp800_38aPlain);
  }

  for (const auto& v : kCcmVectors) {
    const auto sched = key_expand(SecretKey::from_hex(kCcmKey));
    const AeadNonce nonce(from_hex(v.nonce));
    const Bytes tag = from_hex(v.tag);
    suite.check(std::string(v.name) + " seal", [&] {
      const auto out = ccm_vectors::seal(sched, nonce, from_hex(v.aad), from_hex(v.plain), tag.size());
      return to_hex(out.ciphertext) + to_hex(out.tag);
    }, std::string(v.cipher) + v.tag);
    suite.check(std::string(v.name) + " open", [&] {
      return to_hex(ccm_vectors::open(sched, nonce, from_hex(v.aad), from_hex(v.cipher), tag));
    }, v.plain);
  }

  for (const auto& v : kGcmVectors) {
    const SecretKey key = SecretKey::from_hex(v.key);
    const AeadNonce nonce(from_hex(v.nonce));
    suite.check(std::string(v.name) + " seal", [&] {
      return concat(gcm_seal(key, nonce, from_hex(v.aad), from_hex(v.plain)));
    }, std::string(v.cipher) + v.tag);
    suite.check(std::string(v.name) + " open", [&] {
      SealedMessage msg{Mode::Gcm, key.variant(), nonce, from_hex(v.cipher),
                        block_from_hex(v.tag)};
      return to_hex(gcm_open(key, msg, from_hex(v.aad)));
    }, v.plain);
  }

  return suite.take();
}

}  // namespace aeslab
