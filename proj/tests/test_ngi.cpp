#include <doctest.h>

#include <cmath>

#include "aeslab/ngi.hpp"
#include "aeslab/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace aeslab;
using support::error_kind;

TEST_CASE("impurity values") {
  CHECK(ngi(0.5) == doctest::Approx(1.0));
  CHECK(ngi(0.0) == 0.0);
  CHECK(ngi(1.0) == 0.0);
  CHECK(ngi(0.25) == doctest::Approx(0.75));
  CHECK(ngi(0.1) == doctest::Approx(0.36));
  CHECK(ngi(65.0 / 128) == 0.999755859375);

  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    CHECK(ngi(p) == doctest::Approx(ngi(1.0 - p)).epsilon(1e-12));
    CHECK(ngi(p) == doctest::Approx(4 * p * (1 - p)).epsilon(1e-12));
    CHECK(ngi(p) >= 0.0);
    CHECK(ngi(p) <= 1.0);
    if (i > 0 && i <= 500) CHECK(ngi(p) > ngi((i - 1) / 1000.0));
  }

  for (double bad : {-0.01, 1.01, std::nan(""), -static_cast<double>(INFINITY)}) {
    CHECK(error_kind([&] { ngi(bad); }) == ErrorKind::Domain);
  }
}

TEST_CASE("popcount agrees with a per-bit loop") {
  oracle::Gen gen(40);
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 63u, 1000u, 65536u}) {
    const Bytes data = gen.bytes(n);
    CHECK(popcount(data) == oracle::popcount_bitwise(data));
  }
  CHECK(popcount(Bytes(100, 0xff)) == 800);
}

TEST_CASE("bit difference") {
  const Bytes p = from_hex("00ff0f");
  const Bytes c = from_hex("ffff00aa");
  const auto d = xor_diff(p, c);
  CHECK(to_hex(d.diff_octets) == "ff000f");
  CHECK(d.bit_length == 24);
  CHECK(d.ones_count == 12);
  CHECK(ones_ratio(d) == 0.5);

  CHECK(error_kind([&] { xor_diff({}, c); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([&] { xor_diff(p, {}); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([&] { score({}, {}); }) == ErrorKind::InvalidInput);

  const auto same = score(p, p);
  CHECK(same.p1 == 0.0);
  CHECK(same.g == 0.0);
  const auto inverted = score(from_hex("0f0f"), from_hex("f0f0"));
  CHECK(inverted.p1 == 1.0);
  CHECK(inverted.g == 0.0);
}

TEST_CASE("score matches the composed definition and is symmetric") {
  oracle::Gen gen(41);
  for (int i = 0; i < 50; ++i) {
    const Bytes a = gen.bytes(1 + gen.below(5000));
    const Bytes b = gen.bytes(1 + gen.below(5000));
    const auto s = score(a, b, Parallelism{4});
    const auto d = xor_diff(a, b);
    CHECK(s.p1 == ones_ratio(d));
    CHECK(s.g == ngi(ones_ratio(d)));
    CHECK(score(b, a).g == s.g);
    CHECK(score(a, b).p1 == s.p1);
  }
}

TEST_CASE("random data scores close to one") {
  RandomSource rng = RandomSource::seeded(42);
  const Bytes a = rng.bytes(1 << 20);
  const Bytes b = rng.bytes(1 << 20);
  const double g = score(a, b, Parallelism::hardware()).g;
  CHECK(g >= 0.9999);
  CHECK(g <= 1.0);
}
