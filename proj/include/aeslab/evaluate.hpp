#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aeslab/aes.hpp"
#include "aeslab/image.hpp"
#include "aeslab/modes.hpp"
#include "aeslab/parallel.hpp"

namespace aeslab {

class RandomSource;

enum class ReportFormat { Csv, Json, Table };

std::optional<ReportFormat> report_format_from_string(std::string_view name) noexcept;

struct EvaluationRow {
  Mode mode = Mode::Ecb;
  KeyVariant variant = KeyVariant::Aes128;
  std::string image_id;
  std::size_t plain_octets = 0;
  std::size_t cipher_octets = 0;
  double p1 = 0.0;  // mean over trials
  double g = 0.0;   // mean over trials
  double encrypt_ms = 0.0;
  double decrypt_ms = 0.0;
};

struct EvaluationAggregate {
  Mode mode = Mode::Ecb;
  KeyVariant variant = KeyVariant::Aes128;
  std::size_t images = 0;
  double mean_g = 0.0;
  double mean_encrypt_ms = 0.0;
  double mean_decrypt_ms = 0.0;
};

struct EvaluationReport {
  std::vector<EvaluationRow> rows;
  std::vector<EvaluationAggregate> aggregates;

  const EvaluationAggregate* aggregate(Mode mode, KeyVariant variant) const noexcept;
};

struct EvaluationOptions {
  std::vector<Mode> modes{kReportModeOrder.begin(), kReportModeOrder.end()};
  std::vector<KeyVariant> variants{kAllVariants.begin(), kAllVariants.end()};
  unsigned trials = 1;
  // Cells (image x mode x variant) processed concurrently. Timed calls
  // always run single-threaded inside a cell.
  Parallelism cell_workers = Parallelism::serial();
  // When set, writes trial 0 of every cell as <image>_<mode>_<bits>.ppm.
  std::optional<std::filesystem::path> render_dir;
};

// For every image x mode x variant and every trial: draws a fresh key and
// IV/nonce from rng, encrypts the raster, decrypts and checks the result
// against the original (Error(InvalidInput) otherwise), and scores NGI of
// the raster against the ciphertext body. Rows come out in report order
// (mode, then variant, then corpus order) regardless of cell_workers.
// Error(InvalidInput) if trials == 0 or the corpus/mode/variant sets are empty.
EvaluationReport evaluate(const std::vector<CorpusImage>& corpus, const EvaluationOptions& options,
                          RandomSource& rng);

// CSV and JSON carry one entry per row; the table shows per-mode means in
// the mode x key-length layout. Numbers are printed to 5 decimals. Timing
// columns appear only with include_timings, so a seeded run emits the same
// octets every time. Error(InvalidInput) on an empty report.
std::string emit_report(const EvaluationReport& report, ReportFormat format,
                        bool include_timings = false);

}  // namespace aeslab
