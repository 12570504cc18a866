#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aeslab/bytes.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using aeslab::Bytes;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aeslab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("aeslab_cli_" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

Bytes slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void spit(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

const std::string kKeys[] = {"000102030405060708090a0b0c0d0e0f",
                             "000102030405060708090a0b0c0d0e0f1011121314151617",
                             "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f"};

}  // namespace

TEST_CASE("vectors subcommand") {
  const auto r = run({"vectors"});
  CHECK(r.code == aeslab::cli::kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("vectors passed") != std::string::npos);
}

TEST_CASE("file round trip for every mode and key length") {
  TempDir dir;
  Bytes plain(1000);
  for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = static_cast<std::uint8_t>(i * 7);
  spit(dir / "plain.bin", plain);

  for (const char* mode : {"ecb", "cbc", "ctr", "ccm", "gcm"}) {
    for (const auto& key : kKeys) {
      CAPTURE(mode);
      CAPTURE(key.size());
      const auto enc = run({"encrypt", "--mode", mode, "--key", key, "--in", dir / "plain.bin",
                            "--out", dir / "c.aesl"});
      REQUIRE(enc.code == 0);
      CHECK((enc.err.find("ECB") != std::string::npos) == (std::string(mode) == "ecb"));
      CHECK(slurp(dir / "c.aesl") != plain);
      const auto dec = run({"decrypt", "--key", key, "--in", dir / "c.aesl", "--out", dir / "p.bin"});
      REQUIRE(dec.code == 0);
      CHECK(slurp(dir / "p.bin") == plain);
      fs::remove(dir / "p.bin");
    }
  }
}

TEST_CASE("authentication failure leaves no output") {
  TempDir dir;
  spit(dir / "plain.bin", Bytes(100, 0x41));
  REQUIRE(run({"encrypt", "--mode", "gcm", "--key", kKeys[0], "--aad", "0badc0de", "--in",
               dir / "plain.bin", "--out", dir / "c.aesl"})
              .code == 0);
  Bytes c = slurp(dir / "c.aesl");
  c[30] ^= 1;
  spit(dir / "bad.aesl", c);

  const auto r = run({"decrypt", "--key", kKeys[0], "--aad", "0badc0de", "--in", dir / "bad.aesl",
                      "--out", dir / "p.bin"});
  CHECK(r.code == aeslab::cli::kCryptoFailure);
  CHECK(r.err.find("authentication failure") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "p.bin"));

  const auto wrong_aad = run({"decrypt", "--key", kKeys[0], "--in", dir / "c.aesl", "--out", dir / "p.bin"});
  CHECK(wrong_aad.code == aeslab::cli::kCryptoFailure);
  CHECK_FALSE(fs::exists(dir / "p.bin"));

  const auto mismatch = run({"decrypt", "--mode", "ccm", "--key", kKeys[0], "--aad", "0badc0de",
                             "--in", dir / "c.aesl", "--out", dir / "p.bin"});
  CHECK(mismatch.code == aeslab::cli::kUsage);
}

TEST_CASE("generated keys go to a file, never to standard output") {
  TempDir dir;
  spit(dir / "plain.bin", Bytes(50, 1));
  const auto r = run({"encrypt", "--mode", "ctr", "--bits", "256", "--generate-key", "--in",
                      dir / "plain.bin", "--out", dir / "c.aesl"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const Bytes key = slurp(dir / "c.aesl.key");
  const std::string hex(key.begin(), key.end());
  CHECK(hex.size() == 65);
  CHECK(r.err.find(hex.substr(0, 64)) == std::string::npos);
  const auto perms = fs::status(dir / "c.aesl.key").permissions();
  CHECK((perms & (fs::perms::group_all | fs::perms::others_all)) == fs::perms::none);

  const auto dec = run({"decrypt", "--key-file", dir / "c.aesl.key", "--in", dir / "c.aesl", "--out",
                        dir / "p.bin"});
  CHECK(dec.code == 0);
  CHECK(slurp(dir / "p.bin") == Bytes(50, 1));
}

TEST_CASE("evaluate writes one row per image, mode and key length") {
  TempDir dir;
  const auto r = run({"evaluate", "--synth", "42", "--param-seed", "5", "--format", "csv", "--out",
                      dir / "x.csv"});
  REQUIRE(r.code == 0);
  const Bytes csv = slurp(dir / "x.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 135);

  const auto table = run({"evaluate", "--synth", "42", "--param-seed", "5", "--mode", "ecb",
                          "--mode", "gcm", "--bits", "128"});
  REQUIRE(table.code == 0);
  CHECK(table.out.find("ECB") != std::string::npos);
  CHECK(table.out.find("CBC") == std::string::npos);
}

TEST_CASE("evaluate accepts image files") {
  TempDir dir;
  std::string header = "P5\n32 32\n255\n";
  Bytes pgm(header.begin(), header.end());
  pgm.insert(pgm.end(), 1024, 200);
  spit(dir / "a.pgm", pgm);
  const auto r = run({"evaluate", "--mode", "ecb", "--bits", "128", "--format", "csv",
                      dir / "a.pgm"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("a,ECB,128,1024,1040,") != std::string::npos);
}

TEST_CASE("usage and i/o errors") {
  CHECK(run({}).code == aeslab::cli::kUsage);
  CHECK(run({"frobnicate"}).code == aeslab::cli::kUsage);
  CHECK(run({"encrypt", "--mode", "ofb", "--key", kKeys[0], "--in", "a", "--out", "b"}).code ==
        aeslab::cli::kUsage);
  CHECK(run({"encrypt", "--mode", "gcm", "--key", "abcd", "--in", "a", "--out", "b"}).code ==
        aeslab::cli::kUsage);
  CHECK(run({"evaluate", "--synth", "1", "--trials", "0"}).code == aeslab::cli::kUsage);

  TempDir dir;
  const auto missing = run({"encrypt", "--mode", "cbc", "--key", kKeys[0], "--in",
                            dir / "does_not_exist", "--out", dir / "c.aesl"});
  CHECK(missing.code == aeslab::cli::kIoFailure);
  spit(dir / "junk.aesl", Bytes(40, 0x55));
  CHECK(run({"decrypt", "--key", kKeys[0], "--in", dir / "junk.aesl", "--out", dir / "p"}).code ==
        aeslab::cli::kIoFailure);
  CHECK(run({"evaluate", dir / "does_not_exist.pgm"}).code == aeslab::cli::kIoFailure);
}
