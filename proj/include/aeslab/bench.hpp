#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aeslab/aes.hpp"
#include "aeslab/evaluate.hpp"
#include "aeslab/modes.hpp"
#include "aeslab/parallel.hpp"

namespace aeslab {

enum class Direction { Encrypt, Decrypt };

std::string_view to_string(Direction d) noexcept;

struct TimingSample {
  Mode mode = Mode::Ecb;
  KeyVariant variant = KeyVariant::Aes128;
  Direction direction = Direction::Encrypt;
  std::size_t payload_octets = 0;
  std::chrono::nanoseconds elapsed{0};

  double ms() const noexcept { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

// A cell is flagged unstable when its relative standard deviation reaches
// kUnstableRsd; emitted tables mark such cells instead of presenting them as
// ordinary results.
inline constexpr double kUnstableRsd = 0.25;

struct TimingCell {
  Mode mode = Mode::Ecb;
  KeyVariant variant = KeyVariant::Aes128;
  Direction direction = Direction::Encrypt;
  std::size_t payload_octets = 0;
  std::size_t count = 0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double stddev_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;

  double rsd() const noexcept { return mean_ms > 0.0 ? stddev_ms / mean_ms : 0.0; }
  bool unstable() const noexcept { return rsd() >= kUnstableRsd; }
};

TimingCell summarize(std::vector<TimingSample> samples);

struct TimingSummary {
  unsigned workers = 1;
  std::vector<TimingCell> cells;

  const TimingCell* find(Mode mode, KeyVariant variant, Direction direction,
                         std::size_t payload_octets) const noexcept;
  bool stable() const noexcept;
};

struct BenchOptions {
  // Uniform random payloads of these sizes.
  std::vector<std::size_t> payloads{std::size_t{1} << 20};
  // When set, the concatenated rasters of synth_corpus(seed) are benchmarked
  // as one more payload.
  std::optional<std::uint64_t> corpus_seed;
  std::vector<Mode> modes{kReportModeOrder.begin(), kReportModeOrder.end()};
  std::vector<KeyVariant> variants{kAllVariants.begin(), kAllVariants.end()};
  unsigned reps = 30;
  unsigned warmup = 5;
  // Block-parallel workers inside each timed call (ECB, CTR, CCM/GCM bodies).
  Parallelism par = Parallelism::serial();
  std::uint64_t payload_seed = 0x5eed;
};

// Times seal and open for every payload x mode x variant. Payload octets are
// shared by all modes. Each repetition visits every cell once, so slow drift
// in machine state spreads evenly over the cells. Decryption is timed on
// genuine sealed messages, tag verification included.
// Error(InvalidInput) if reps < 5, warmup < 1, or a payload is empty.
TimingSummary run_bench(const BenchOptions& options);

// Text table: one mode x key-length grid of means per direction and payload,
// rows in report order. CSV/JSON carry the full statistics.
std::string emit_timing_table(const TimingSummary& summary, ReportFormat format);

// Inverse of the JSON emission.
TimingSummary timing_summary_from_json(std::string_view json);

// Octets of sealing the whole payload once with `workers` block-parallel
// workers, for comparing the parallel demonstration against the serial path.
Bytes parallel_demo_ciphertext(Mode mode, KeyVariant variant, ByteView payload, unsigned workers);

}  // namespace aeslab
