#include "aeslab/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "aeslab/cipher.hpp"
#include "aeslab/error.hpp"
#include "aeslab/image.hpp"
#include "aeslab/random.hpp"

namespace aeslab {

namespace {

using Clock = std::chrono::steady_clock;

std::string fixed5(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << v;
  return os.str();
}

struct BenchCell {
  Mode mode;
  KeyVariant variant;
  std::size_t payload_index;
  SecretKey key;
  ModeHeader header;
  SealedMessage sealed;
  std::vector<TimingSample> encrypt;
  std::vector<TimingSample> decrypt;
};

// Keeps the optimizer from discarding a result.
volatile std::uint8_t g_sink = 0;

Direction direction_from(std::string_view s) {
  if (s == "encrypt") return Direction::Encrypt;
  if (s == "decrypt") return Direction::Decrypt;
  throw Error(ErrorKind::Format, "unknown direction in timing summary");
}

}  // namespace

std::string_view to_string(Direction d) noexcept {
  return d == Direction::Encrypt ? "encrypt" : "decrypt";
}

TimingCell summarize(std::vector<TimingSample> samples) {
  TimingCell cell;
  if (samples.empty()) return cell;
  cell.mode = samples.front().mode;
  cell.variant = samples.front().variant;
  cell.direction = samples.front().direction;
  cell.payload_octets = samples.front().payload_octets;
  cell.count = samples.size();

  std::vector<double> ms;
  ms.reserve(samples.size());
  for (const auto& s : samples) ms.push_back(s.ms());
  std::sort(ms.begin(), ms.end());
  const double n = static_cast<double>(ms.size());
  cell.mean_ms = std::accumulate(ms.begin(), ms.end(), 0.0) / n;
  const std::size_t mid = ms.size() / 2;
  cell.median_ms = ms.size() % 2 ? ms[mid] : 0.5 * (ms[mid - 1] + ms[mid]);
  double ss = 0.0;
  for (double v : ms) ss += (v - cell.mean_ms) * (v - cell.mean_ms);
  cell.stddev_ms = ms.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  cell.min_ms = ms.front();
  cell.max_ms = ms.back();
  return cell;
}

const TimingCell* TimingSummary::find(Mode mode, KeyVariant variant, Direction direction,
                                      std::size_t payload_octets) const noexcept {
  for (const auto& c : cells)
    if (c.mode == mode && c.variant == variant && c.direction == direction &&
        c.payload_octets == payload_octets)
      return &c;
  return nullptr;
}

bool TimingSummary::stable() const noexcept {
  return std::none_of(cells.begin(), cells.end(), [](const TimingCell& c) { return c.unstable(); });
}

TimingSummary run_bench(const BenchOptions& options) {
  if (options.reps < 5) throw Error(ErrorKind::InvalidInput, "reps must be at least 5");
  if (options.warmup < 1) throw Error(ErrorKind::InvalidInput, "warmup must be at least 1");
  if ((options.payloads.empty() && !options.corpus_seed) || options.modes.empty() || options.variants.empty()) {
    throw Error(ErrorKind::InvalidInput, "nothing to benchmark");
  }

  RandomSource rng = RandomSource::seeded(options.payload_seed);
  std::vector<Bytes> payloads;
  for (std::size_t size : options.payloads) {
    if (size == 0) throw Error(ErrorKind::InvalidInput, "payload sizes must be positive");
    payloads.push_back(rng.bytes(size));
  }
  if (options.corpus_seed) {
    Bytes raster;
    for (const auto& img : synth_corpus(*options.corpus_seed)) {
      raster.insert(raster.end(), img.image.pixels.begin(), img.image.pixels.end());
    }
    payloads.push_back(std::move(raster));
  }

  std::vector<BenchCell> cells;
  for (std::size_t p = 0; p < payloads.size(); ++p) {
    for (Mode m : kReportModeOrder) {
      if (std::find(options.modes.begin(), options.modes.end(), m) == options.modes.end()) continue;
      for (KeyVariant v : kAllVariants) {
        if (std::find(options.variants.begin(), options.variants.end(), v) ==
            options.variants.end())
          continue;
        SecretKey key = SecretKey::generate(v, rng);
        ModeHeader header = fresh_header(m, rng);
        SealedMessage sealed = seal(m, key, payloads[p], header, {}, options.par);
        cells.push_back({m, v, p, std::move(key), std::move(header), std::move(sealed), {}, {}});
      }
    }
  }

  const unsigned total = options.warmup + options.reps;
  for (unsigned rep = 0; rep < total; ++rep) {
    const bool keep = rep >= options.warmup;
    for (auto& cell : cells) {
      const Bytes& payload = payloads[cell.payload_index];

      const auto t0 = Clock::now();
      const SealedMessage msg = seal(cell.mode, cell.key, payload, cell.header, {}, options.par);
      const auto t1 = Clock::now();
      const Bytes plain = open(cell.key, cell.sealed, {}, options.par);
      const auto t2 = Clock::now();

      g_sink = g_sink ^ msg.body.back() ^ plain.front();
      if (keep) {
        cell.encrypt.push_back({cell.mode, cell.variant, Direction::Encrypt, payload.size(),
                                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)});
        cell.decrypt.push_back({cell.mode, cell.variant, Direction::Decrypt, payload.size(),
                                std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1)});
      }
    }
  }

  TimingSummary summary;
  summary.workers = std::max(1u, options.par.workers);
  for (Direction d : {Direction::Encrypt, Direction::Decrypt}) {
    for (auto& cell : cells) {
      summary.cells.push_back(summarize(d == Direction::Encrypt ? cell.encrypt : cell.decrypt));
    }
  }
  return summary;
}

std::string emit_timing_table(const TimingSummary& summary, ReportFormat format) {
  if (summary.cells.empty()) throw Error(ErrorKind::InvalidInput, "empty timing summary");

  switch (format) {
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "direction,payload_octets,mode,bits,count,mean_ms,median_ms,stddev_ms,min_ms,max_ms,"
            "unstable\n";
      for (const auto& c : summary.cells) {
        os << to_string(c.direction) << ',' << c.payload_octets << ',' << to_string(c.mode) << ','
           << key_bits(c.variant) << ',' << c.count << ',' << fixed5(c.mean_ms) << ','
           << fixed5(c.median_ms) << ',' << fixed5(c.stddev_ms) << ',' << fixed5(c.min_ms) << ','
           << fixed5(c.max_ms) << ',' << (c.unstable() ? "true" : "false") << "\n";
      }
      return os.str();
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (const auto& c : summary.cells) {
        cells.push_back({{"direction", to_string(c.direction)},
                         {"payload_octets", c.payload_octets},
                         {"mode", to_string(c.mode)},
                         {"bits", key_bits(c.variant)},
                         {"count", c.count},
                         {"mean_ms", c.mean_ms},
                         {"median_ms", c.median_ms},
                         {"stddev_ms", c.stddev_ms},
                         {"min_ms", c.min_ms},
                         {"max_ms", c.max_ms},
                         {"unstable", c.unstable()}});
      }
      nlohmann::ordered_json doc = {{"workers", summary.workers}, {"cells", cells}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Table: {
      std::vector<std::size_t> payloads;
      for (const auto& c : summary.cells)
        if (std::find(payloads.begin(), payloads.end(), c.payload_octets) == payloads.end())
          payloads.push_back(c.payload_octets);

      std::ostringstream os;
      bool flagged = false;
      for (Direction d : {Direction::Encrypt, Direction::Decrypt}) {
        for (std::size_t p : payloads) {
          os << (d == Direction::Encrypt ? "Encryption" : "Decryption") << " time, mean ms ("
             << p << " octets, " << summary.workers << " worker"
             << (summary.workers == 1 ? "" : "s") << ")\n";
          os << std::left << std::setw(6) << "Mode";
          for (KeyVariant v : kAllVariants) os << std::right << std::setw(12) << to_string(v);
          os << "\n";
          for (Mode m : kReportModeOrder) {
            bool any = false;
            for (KeyVariant v : kAllVariants) any = any || summary.find(m, v, d, p);
            if (!any) continue;
            os << std::left << std::setw(6) << to_string(m);
            for (KeyVariant v : kAllVariants) {
              const auto* c = summary.find(m, v, d, p);
              std::string cell = "-";
              if (c) {
                cell = fixed5(c->mean_ms);
                if (c->unstable()) {
                  cell += "*";
                  flagged = true;
                }
              }
              os << std::right << std::setw(12) << cell;
            }
            os << "\n";
          }
          os << "\n";
        }
      }
      if (flagged) {
        os << "* UNSTABLE: relative standard deviation >= " << kUnstableRsd * 100
           << "%; rerun on a quieter machine before drawing conclusions.\n";
      }
      return os.str();
    }
  }
  return {};
}

TimingSummary timing_summary_from_json(std::string_view json) {
  TimingSummary summary;
  try {
    const auto doc = nlohmann::json::parse(json);
    summary.workers = doc.at("workers").get<unsigned>();
    for (const auto& j : doc.at("cells")) {
      TimingCell c;
      c.direction = direction_from(j.at("direction").get<std::string>());
      c.payload_octets = j.at("payload_octets").get<std::size_t>();
      const auto mode = mode_from_string(j.at("mode").get<std::string>());
      const auto variant = variant_from_bits(j.at("bits").get<int>());
      if (!mode || !variant) throw Error(ErrorKind::Format, "bad mode or key length");
      c.mode = *mode;
      c.variant = *variant;
      c.count = j.at("count").get<std::size_t>();
      c.mean_ms = j.at("mean_ms").get<double>();
      c.median_ms = j.at("median_ms").get<double>();
      c.stddev_ms = j.at("stddev_ms").get<double>();
      c.min_ms = j.at("min_ms").get<double>();
      c.max_ms = j.at("max_ms").get<double>();
      summary.cells.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, std::string("timing summary: ") + e.what());
  }
  return summary;
}

Bytes parallel_demo_ciphertext(Mode mode, KeyVariant variant, ByteView payload, unsigned workers) {
  RandomSource rng = RandomSource::seeded(0xdec0de);
  const SecretKey key = SecretKey::generate(variant, rng);
  const ModeHeader header = fresh_header(mode, rng);
  const SealedMessage msg = seal(mode, key, payload, header, {}, Parallelism{workers});
  Bytes out = msg.body;
  if (msg.tag) out.insert(out.end(), msg.tag->begin(), msg.tag->end());
  return out;
}

}  // namespace aeslab
