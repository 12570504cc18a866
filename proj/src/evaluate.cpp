#include "aeslab/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "aeslab/cipher.hpp"
#include "aeslab/error.hpp"
#include "aeslab/ngi.hpp"
#include "aeslab/random.hpp"

namespace aeslab {

namespace {

using Clock = std::chrono::steady_clock;

struct TrialParams {
  SecretKey key;
  ModeHeader header;
};

struct Cell {
  Mode mode;
  KeyVariant variant;
  std::size_t image;
  std::vector<TrialParams> trials;
};

double elapsed_ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

std::string fixed5(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << v;
  return os.str();
}

double round5(double v) { return std::round(v * 1e5) / 1e5; }

EvaluationRow run_cell(const Cell& cell, const CorpusImage& img, const EvaluationOptions& options) {
  EvaluationRow row;
  row.mode = cell.mode;
  row.variant = cell.variant;
  row.image_id = img.id;
  row.plain_octets = img.image.pixels.size();

  for (std::size_t t = 0; t < cell.trials.size(); ++t) {
    const auto& params = cell.trials[t];
    const auto t0 = Clock::now();
    const SealedMessage msg =
        seal(cell.mode, params.key, img.image.pixels, params.header, {}, Parallelism::serial());
    const auto t1 = Clock::now();
    const Bytes back = open(params.key, msg, {}, Parallelism::serial());
    const auto t2 = Clock::now();
    if (back != img.image.pixels) {
      throw Error(ErrorKind::InvalidInput, "decrypt-verify failed for " + img.id + " under " +
                                               std::string(to_string(cell.mode)));
    }
    const NgiScore s = score(img.image.pixels, msg.body);
    row.cipher_octets = msg.body.size();
    row.p1 += s.p1;
    row.g += s.g;
    row.encrypt_ms += elapsed_ms(t0, t1);
    row.decrypt_ms += elapsed_ms(t1, t2);

    if (t == 0 && options.render_dir) {
      const RawImage rendered = render_cipher_image(img.image, msg);
      const auto name = img.id + "_" + std::string(to_string(cell.mode)) + "_" +
                        std::to_string(key_bits(cell.variant)) + ".ppm";
      std::string lower = name;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      write_file(*options.render_dir / lower, encode_ppm(rendered));
    }
  }
  const double n = static_cast<double>(cell.trials.size());
  row.p1 /= n;
  row.g /= n;
  row.encrypt_ms /= n;
  row.decrypt_ms /= n;
  return row;
}

}  // namespace

std::optional<ReportFormat> report_format_from_string(std::string_view name) noexcept {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "table") return ReportFormat::Table;
  return std::nullopt;
}

const EvaluationAggregate* EvaluationReport::aggregate(Mode mode,
                                                       KeyVariant variant) const noexcept {
  for (const auto& a : aggregates)
    if (a.mode == mode && a.variant == variant) return &a;
  return nullptr;
}

EvaluationReport evaluate(const std::vector<CorpusImage>& corpus, const EvaluationOptions& options,
                          RandomSource& rng) {
  if (options.trials == 0) throw Error(ErrorKind::InvalidInput, "trials must be at least 1");
  if (corpus.empty() || options.modes.empty() || options.variants.empty()) {
    throw Error(ErrorKind::InvalidInput, "nothing to evaluate");
  }
  for (const auto& img : corpus) img.image.validate();

  std::vector<Mode> modes;
  for (Mode m : kReportModeOrder)
    if (std::find(options.modes.begin(), options.modes.end(), m) != options.modes.end())
      modes.push_back(m);
  std::vector<KeyVariant> variants;
  for (KeyVariant v : kAllVariants)
    if (std::find(options.variants.begin(), options.variants.end(), v) != options.variants.end())
      variants.push_back(v);

  // Parameters are drawn up front, in report order, so the outcome does not
  // depend on how cells are scheduled.
  std::vector<Cell> cells;
  for (Mode m : modes) {
    for (KeyVariant v : variants) {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        Cell cell{m, v, i, {}};
        for (unsigned t = 0; t < options.trials; ++t) {
          SecretKey key = SecretKey::generate(v, rng);
          cell.trials.push_back({std::move(key), fresh_header(m, rng)});
        }
        cells.push_back(std::move(cell));
      }
    }
  }

  EvaluationReport report;
  report.rows.resize(cells.size());
  std::exception_ptr failure;
  std::mutex failure_lock;
  for_each_range(cells.size(), options.cell_workers,
                 [&](std::size_t begin, std::size_t end) {
                   for (std::size_t i = begin; i < end; ++i) {
                     try {
                       report.rows[i] = run_cell(cells[i], corpus[cells[i].image], options);
                     } catch (...) {
                       std::lock_guard lock(failure_lock);
                       if (!failure) failure = std::current_exception();
                     }
                   }
                 },
                 1);
  if (failure) std::rethrow_exception(failure);

  for (Mode m : modes) {
    for (KeyVariant v : variants) {
      EvaluationAggregate agg{m, v, 0, 0.0, 0.0, 0.0};
      for (const auto& row : report.rows) {
        if (row.mode != m || row.variant != v) continue;
        ++agg.images;
        agg.mean_g += row.g;
        agg.mean_encrypt_ms += row.encrypt_ms;
        agg.mean_decrypt_ms += row.decrypt_ms;
      }
      const double n = static_cast<double>(agg.images);
      agg.mean_g /= n;
      agg.mean_encrypt_ms /= n;
      agg.mean_decrypt_ms /= n;
      report.aggregates.push_back(agg);
    }
  }
  return report;
}

std::string emit_report(const EvaluationReport& report, ReportFormat format,
                        bool include_timings) {
  if (report.rows.empty()) throw Error(ErrorKind::InvalidInput, "empty report");

  switch (format) {
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "image,mode,bits,plain_octets,cipher_octets,p1,g";
      if (include_timings) os << ",encrypt_ms,decrypt_ms";
      os << "\n";
      for (const auto& r : report.rows) {
        os << r.image_id << ',' << to_string(r.mode) << ',' << key_bits(r.variant) << ','
           << r.plain_octets << ',' << r.cipher_octets << ',' << fixed5(r.p1) << ','
           << fixed5(r.g);
        if (include_timings) os << ',' << fixed5(r.encrypt_ms) << ',' << fixed5(r.decrypt_ms);
        os << "\n";
      }
      return os.str();
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : report.rows) {
        nlohmann::ordered_json j = {{"image", r.image_id},
                                    {"mode", to_string(r.mode)},
                                    {"bits", key_bits(r.variant)},
                                    {"plain_octets", r.plain_octets},
                                    {"cipher_octets", r.cipher_octets},
                                    {"p1", round5(r.p1)},
                                    {"g", round5(r.g)}};
        if (include_timings) {
          j["encrypt_ms"] = round5(r.encrypt_ms);
          j["decrypt_ms"] = round5(r.decrypt_ms);
        }
        rows.push_back(std::move(j));
      }
      nlohmann::ordered_json aggs = nlohmann::ordered_json::array();
      for (const auto& a : report.aggregates) {
        nlohmann::ordered_json j = {{"mode", to_string(a.mode)},
                                    {"bits", key_bits(a.variant)},
                                    {"images", a.images},
                                    {"mean_g", round5(a.mean_g)}};
        if (include_timings) {
          j["mean_encrypt_ms"] = round5(a.mean_encrypt_ms);
          j["mean_decrypt_ms"] = round5(a.mean_decrypt_ms);
        }
        aggs.push_back(std::move(j));
      }
      nlohmann::ordered_json doc = {{"rows", rows}, {"aggregates", aggs}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Table: {
      std::vector<KeyVariant> variants;
      for (KeyVariant v : kAllVariants)
        for (const auto& a : report.aggregates)
          if (a.variant == v) {
            variants.push_back(v);
            break;
          }
      auto table = [&](const std::string& title, auto value) {
        std::ostringstream os;
        os << title << "\n" << std::left << std::setw(6) << "Mode";
        for (KeyVariant v : variants) os << std::right << std::setw(10) << to_string(v);
        os << "\n";
        for (Mode m : kReportModeOrder) {
          bool any = false;
          for (KeyVariant v : variants) any = any || report.aggregate(m, v);
          if (!any) continue;
          os << std::left << std::setw(6) << to_string(m);
          for (KeyVariant v : variants) {
            const auto* a = report.aggregate(m, v);
            os << std::right << std::setw(10) << (a ? fixed5(value(*a)) : std::string("-"));
          }
          os << "\n";
        }
        return os.str();
      };
      std::string out = table("Normalized Gini impurity (mean over images)",
                              [](const EvaluationAggregate& a) { return a.mean_g; });
      if (include_timings) {
        out += "\n" + table("Encryption time, ms (mean over images)",
                            [](const EvaluationAggregate& a) { return a.mean_encrypt_ms; });
        out += "\n" + table("Decryption time, ms (mean over images)",
                            [](const EvaluationAggregate& a) { return a.mean_decrypt_ms; });
      }
      return out;
    }
  }
  return {};
}

}  // namespace aeslab
