#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "aeslab/evaluate.hpp"
#include "aeslab/image.hpp"
#include "aeslab/ngi.hpp"
#include "aeslab/random.hpp"
#include "support.hpp"

using namespace aeslab;
using support::error_kind;

namespace {

std::vector<CorpusImage> small_corpus() {
  auto corpus = synth_corpus(42);
  corpus.resize(3);
  return corpus;
}

EvaluationReport run(unsigned trials, std::uint64_t seed, unsigned workers = 1) {
  EvaluationOptions opt;
  opt.trials = trials;
  opt.cell_workers = Parallelism{workers};
  RandomSource rng = RandomSource::seeded(seed);
  return evaluate(small_corpus(), opt, rng);
}

}  // namespace

TEST_CASE("rows follow report order and secure modes score near one") {
  const auto report = run(2, 60);
  REQUIRE(report.rows.size() == 3 * 5 * 3);
  REQUIRE(report.aggregates.size() == 15);

  std::size_t i = 0;
  for (Mode m : kReportModeOrder)
    for (KeyVariant v : kAllVariants)
      for (const char* id : {"flat", "frame", "shapes"}) {
        const auto& r = report.rows[i++];
        CHECK(r.mode == m);
        CHECK(r.variant == v);
        CHECK(r.image_id == id);
        CHECK(r.plain_octets == 65536);
        CHECK(r.cipher_octets == (m == Mode::Ecb || m == Mode::Cbc ? 65552u : 65536u));
        CHECK(r.g == doctest::Approx(ngi(r.p1)).epsilon(0.01));
      }

  for (KeyVariant v : kAllVariants) {
    const double ecb = report.aggregate(Mode::Ecb, v)->mean_g;
    CHECK(report.aggregate(Mode::Ecb, v)->images == 3);
    for (Mode m : {Mode::Cbc, Mode::Ccm, Mode::Ctr, Mode::Gcm}) {
      const double g = report.aggregate(m, v)->mean_g;
      CHECK(g >= 0.9999);
      CHECK(g > ecb);
    }
  }
}

TEST_CASE("seeded evaluation is reproducible regardless of worker count") {
  const auto a = emit_report(run(2, 61, 1), ReportFormat::Csv);
  const auto b = emit_report(run(2, 61, 4), ReportFormat::Csv);
  const auto c = emit_report(run(2, 62, 1), ReportFormat::Csv);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("report formats carry the same numbers") {
  const auto report = run(1, 63);
  const std::string csv = emit_report(report, ReportFormat::Csv);
  const auto json = nlohmann::json::parse(emit_report(report, ReportFormat::Json));

  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "image,mode,bits,plain_octets,cipher_octets,p1,g");
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    const auto& row = json["rows"][i++];
    std::ostringstream expect;
    expect << row["image"].get<std::string>() << ',' << row["mode"].get<std::string>() << ','
           << row["bits"].get<int>() << ',' << row["plain_octets"].get<std::size_t>() << ','
           << row["cipher_octets"].get<std::size_t>() << ',';
    CHECK(line.rfind(expect.str(), 0) == 0);
    const auto fields = line.substr(expect.str().size());
    const auto comma = fields.find(',');
    CHECK(std::stod(fields.substr(0, comma)) == doctest::Approx(row["p1"].get<double>()).epsilon(1e-9));
    CHECK(std::stod(fields.substr(comma + 1)) == doctest::Approx(row["g"].get<double>()).epsilon(1e-9));
  }
  CHECK(i == report.rows.size());
  CHECK(json["aggregates"].size() == 15);

  const std::string table = emit_report(report, ReportFormat::Table);
  CHECK(table.rfind("Normalized Gini impurity (mean over images)\n", 0) == 0);
  const auto ecb = table.find("\nECB");
  CHECK(ecb != std::string::npos);
  CHECK(ecb < table.find("\nCBC"));
  CHECK(table.find("\nCBC") < table.find("\nCCM"));
  CHECK(table.find("\nCCM") < table.find("\nCTR"));
  CHECK(table.find("\nCTR") < table.find("\nGCM"));
  CHECK(table.find("AES-256") != std::string::npos);
  CHECK(table.find("time") == std::string::npos);
  CHECK(emit_report(report, ReportFormat::Table, true).find("Encryption time") != std::string::npos);
  CHECK(emit_report(report, ReportFormat::Csv, true).find("encrypt_ms,decrypt_ms") != std::string::npos);
}

TEST_CASE("invalid options") {
  RandomSource rng = RandomSource::seeded(64);
  EvaluationOptions opt;
  opt.trials = 0;
  CHECK(error_kind([&] { evaluate(small_corpus(), opt, rng); }) == ErrorKind::InvalidInput);
  opt.trials = 1;
  CHECK(error_kind([&] { evaluate({}, opt, rng); }) == ErrorKind::InvalidInput);
  opt.modes.clear();
  CHECK(error_kind([&] { evaluate(small_corpus(), opt, rng); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([&] { emit_report({}, ReportFormat::Csv); }) == ErrorKind::InvalidInput);
  CHECK(report_format_from_string("json") == ReportFormat::Json);
  CHECK_FALSE(report_format_from_string("xml").has_value());
}

TEST_CASE("renders are written per cell") {
  const auto dir = std::filesystem::temp_directory_path() / "aeslab_test_render";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  EvaluationOptions opt;
  opt.modes = {Mode::Ecb, Mode::Gcm};
  opt.variants = {KeyVariant::Aes256};
  opt.render_dir = dir;
  RandomSource rng = RandomSource::seeded(65);
  evaluate(small_corpus(), opt, rng);
  for (const char* name : {"flat_ecb_256.ppm", "frame_gcm_256.ppm", "shapes_ecb_256.ppm"}) {
    CAPTURE(name);
    CHECK(std::filesystem::exists(dir / name));
  }
  const auto img = load_image(dir / "flat_ecb_256.ppm");
  CHECK(img.channels == 3);
  CHECK(img.width == 256);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 6);
  std::filesystem::remove_all(dir);
}

TEST_CASE("ECB stays lowest across corpus seeds and key length does not matter for the others") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    CAPTURE(seed);
    RandomSource rng = RandomSource::seeded(100 + seed);
    const auto report = evaluate(synth_corpus(seed), EvaluationOptions{}, rng);
    for (KeyVariant v : kAllVariants) {
      double secure_min = 1.0;
      for (Mode m : {Mode::Cbc, Mode::Ccm, Mode::Ctr, Mode::Gcm})
        secure_min = std::min(secure_min, report.aggregate(m, v)->mean_g);
      CHECK(report.aggregate(Mode::Ecb, v)->mean_g < secure_min);
    }
    for (Mode m : {Mode::Cbc, Mode::Ccm, Mode::Ctr, Mode::Gcm}) {
      CHECK(std::abs(report.aggregate(m, KeyVariant::Aes128)->mean_g -
                     report.aggregate(m, KeyVariant::Aes256)->mean_g) < 1e-3);
    }
  }
}
