#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "aeslab/bench.hpp"
#include "aeslab/cipher.hpp"
#include "aeslab/container.hpp"
#include "aeslab/error.hpp"
#include "aeslab/evaluate.hpp"
#include "aeslab/image.hpp"
#include "aeslab/random.hpp"
#include "aeslab/vectors.hpp"

namespace aeslab::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kEcbWarning =
    "warning: ECB encrypts equal blocks to equal ciphertext and leaks image structure; "
    "it has the lowest normalized Gini impurity of all modes at every key length "
    "(see `aeslab evaluate`). Prefer GCM or CCM.";

struct KeyArgs {
  std::string hex;
  std::string file;
  bool generate = false;
  std::string key_out;
};

struct Options {
  std::string mode;
  std::vector<std::string> modes;
  std::vector<int> bits;
  KeyArgs key;
  std::string in;
  std::string out;
  std::string aad;
  std::string iv;
  std::string nonce;
  std::optional<std::uint64_t> synth;
  std::vector<std::string> images;
  std::optional<std::uint64_t> param_seed;
  unsigned trials = 1;
  unsigned reps = 30;
  unsigned warmup = 5;
  unsigned workers = 1;
  std::vector<std::size_t> payloads;
  bool no_corpus = false;
  std::string format = "table";
  std::string render_dir;
  bool timings = false;
  bool parallel_demo = false;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

void write_output(const std::string& path, std::string_view text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  write_file(path, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::optional<KeyVariant> bits_option(const Options& o) {
  if (o.bits.empty()) return std::nullopt;
  if (o.bits.size() > 1) throw Error(ErrorKind::InvalidInput, "give --bits once for this command");
  const auto v = variant_from_bits(o.bits.front());
  if (!v) throw Error(ErrorKind::InvalidInput, "--bits must be 128, 192 or 256");
  return v;
}

SecretKey resolve_key(const Options& o, std::optional<KeyVariant> want, bool allow_generate,
                      std::ostream& err) {
  const int sources = !o.key.hex.empty() + !o.key.file.empty() + o.key.generate;
  if (sources != 1) {
    throw Error(ErrorKind::InvalidInput,
                allow_generate ? "give exactly one of --key, --key-file, --generate-key"
                               : "give exactly one of --key, --key-file");
  }
  if (o.key.generate) {
    if (!allow_generate) throw Error(ErrorKind::InvalidInput, "--generate-key only applies to encrypt");
    RandomSource rng = RandomSource::system();
    const SecretKey key = SecretKey::generate(want.value_or(KeyVariant::Aes128), rng);
    const std::string path = o.key.key_out.empty() ? o.out + ".key" : o.key.key_out;
    const std::string hex = to_hex(key.octets()) + "\n";
    write_file(path, ByteView(reinterpret_cast<const std::uint8_t*>(hex.data()), hex.size()));
    fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write, fs::perm_options::replace);
    err << "generated " << to_string(key.variant()) << " key written to " << path << "\n";
    return key;
  }
  std::string hex = o.key.hex;
  if (!o.key.file.empty()) {
    const Bytes raw = read_file(o.key.file);
    hex = trim(std::string(raw.begin(), raw.end()));
  }
  SecretKey key = SecretKey::from_hex(hex);
  if (want && *want != key.variant()) {
    throw Error(ErrorKind::InvalidKey, "--bits " + std::to_string(key_bits(*want)) +
                                           " does not match the " +
                                           std::to_string(key_bits(key.variant())) + "-bit key");
  }
  return key;
}

Mode parse_mode(const std::string& name) {
  const auto m = mode_from_string(name);
  if (!m) throw Error(ErrorKind::InvalidInput, "unknown mode '" + name + "'");
  return *m;
}

ModeHeader header_for(Mode mode, const Options& o) {
  RandomSource rng = RandomSource::system();
  switch (mode) {
    case Mode::Ecb:
      if (!o.iv.empty() || !o.nonce.empty())
        throw Error(ErrorKind::InvalidInput, "ECB takes no IV or nonce");
      return std::monostate{};
    case Mode::Cbc:
      if (!o.nonce.empty()) throw Error(ErrorKind::InvalidInput, "CBC takes --iv, not --nonce");
      return o.iv.empty() ? InitialValue::generate(rng) : InitialValue{block_from_hex(o.iv)};
    case Mode::Ctr:
      // The full initial counter block: 8-octet nonce || 8-octet counter.
      if (!o.nonce.empty()) throw Error(ErrorKind::InvalidInput, "CTR takes --iv (the first counter block)");
      return o.iv.empty() ? CounterSpec::generate(rng) : CounterSpec::from_block(block_from_hex(o.iv));
    case Mode::Ccm:
    case Mode::Gcm:
      if (!o.iv.empty()) throw Error(ErrorKind::InvalidInput, "authenticated modes take --nonce");
      return o.nonce.empty() ? AeadNonce::generate(rng, kGcmNonceLength)
                             : AeadNonce(from_hex(o.nonce));
  }
  return std::monostate{};
}

int cmd_encrypt(const Options& o, std::ostream& err) {
  if (o.mode.empty()) throw Error(ErrorKind::InvalidInput, "--mode is required");
  if (o.in.empty() || o.out.empty()) throw Error(ErrorKind::InvalidInput, "--in and --out are required");
  const Mode mode = parse_mode(o.mode);
  if (!o.aad.empty() && !is_authenticated(mode)) {
    throw Error(ErrorKind::InvalidInput, "--aad only applies to ccm and gcm");
  }
  const SecretKey key = resolve_key(o, bits_option(o), true, err);
  if (mode == Mode::Ecb) err << kEcbWarning << "\n";
  const Bytes plain = read_file(o.in);
  const SealedMessage msg = seal(mode, key, plain, header_for(mode, o), from_hex(o.aad));
  write_file(o.out, serialize(msg));
  return kOk;
}

int cmd_decrypt(const Options& o, std::ostream& err) {
  if (o.in.empty() || o.out.empty()) throw Error(ErrorKind::InvalidInput, "--in and --out are required");
  const SealedMessage msg = deserialize(read_file(o.in));
  if (!o.mode.empty() && parse_mode(o.mode) != msg.mode) {
    throw Error(ErrorKind::ModeMismatch, "file holds a " + std::string(to_string(msg.mode)) +
                                             " message, --mode says " + o.mode);
  }
  const SecretKey key = resolve_key(o, bits_option(o), false, err);
  // open() verifies CCM/GCM tags before returning anything.
  const Bytes plain = open(key, msg, from_hex(o.aad));
  write_file(o.out, plain);
  return kOk;
}

std::vector<Mode> selected_modes(const Options& o) {
  std::vector<Mode> modes;
  for (const auto& name : o.modes) modes.push_back(parse_mode(name));
  if (modes.empty()) modes.assign(kReportModeOrder.begin(), kReportModeOrder.end());
  return modes;
}

std::vector<KeyVariant> selected_variants(const Options& o) {
  std::vector<KeyVariant> out;
  for (int b : o.bits) {
    const auto v = variant_from_bits(b);
    if (!v) throw Error(ErrorKind::InvalidInput, "--bits must be 128, 192 or 256");
    out.push_back(*v);
  }
  if (out.empty()) out.assign(kAllVariants.begin(), kAllVariants.end());
  return out;
}

ReportFormat selected_format(const Options& o) {
  const auto f = report_format_from_string(o.format);
  if (!f) throw Error(ErrorKind::InvalidInput, "--format must be csv, json or table");
  return *f;
}

int cmd_evaluate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.synth.has_value() == !o.images.empty()) {
    throw Error(ErrorKind::InvalidInput, "give either --synth <seed> or image files");
  }
  std::vector<CorpusImage> corpus;
  if (o.synth) {
    corpus = synth_corpus(*o.synth);
  } else {
    for (const auto& path : o.images) {
      corpus.push_back({fs::path(path).stem().string(), load_image(path)});
    }
  }
  EvaluationOptions opts;
  opts.modes = selected_modes(o);
  opts.variants = selected_variants(o);
  opts.trials = o.trials;
  opts.cell_workers = Parallelism{o.workers};
  if (!o.render_dir.empty()) {
    fs::create_directories(o.render_dir);
    opts.render_dir = o.render_dir;
  }
  RandomSource rng = o.param_seed ? RandomSource::seeded(*o.param_seed) : RandomSource::system();
  const EvaluationReport report = evaluate(corpus, opts, rng);
  write_output(o.out, emit_report(report, selected_format(o), o.timings), out);
  if (!o.out.empty() && o.out != "-") {
    err << "wrote " << report.rows.size() << " rows to " << o.out << "\n";
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchOptions opts;
  if (!o.payloads.empty()) opts.payloads = o.payloads;
  if (!o.no_corpus) opts.corpus_seed = o.synth.value_or(42);
  opts.modes = selected_modes(o);
  opts.variants = selected_variants(o);
  opts.reps = o.reps;
  opts.warmup = o.warmup;
  const ReportFormat format = selected_format(o);

  const TimingSummary serial = run_bench(opts);
  std::string text = emit_timing_table(serial, format);

  if (o.parallel_demo) {
    const Parallelism par = Parallelism::hardware();
    RandomSource rng = RandomSource::seeded(opts.payload_seed);
    const Bytes payload = rng.bytes(opts.payloads.front());
    for (Mode m : {Mode::Ecb, Mode::Ctr, Mode::Gcm}) {
      for (KeyVariant v : opts.variants) {
        if (parallel_demo_ciphertext(m, v, payload, 1) !=
            parallel_demo_ciphertext(m, v, payload, par.workers)) {
          err << "parallel " << to_string(m) << " output differs from serial output\n";
          return kCryptoFailure;
        }
      }
    }
    BenchOptions popts = opts;
    popts.modes = {Mode::Ecb, Mode::Ctr, Mode::Gcm};
    popts.par = par;
    const TimingSummary parallel = run_bench(popts);
    if (format == ReportFormat::Table) {
      text += "Parallel demonstration (ciphertexts identical to the serial path)\n\n";
    }
    text += emit_timing_table(parallel, format);
  }

  write_output(o.out, text, out);
  if (!serial.stable()) {
    err << "warning: some cells exceeded the relative standard deviation limit and are marked "
           "unstable\n";
  }
  return kOk;
}

int cmd_vectors(std::ostream& out) {
  bool all = true;
  std::size_t passed = 0;
  const auto results = run_known_answer_suite();
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    all = all && r.passed;
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " vectors passed\n";
  return all ? kOk : kCryptoFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AES modes laboratory: encryption, NGI image evaluation, and timing", "aeslab"};
  app.require_subcommand(1);
  Options o;

  auto add_filters = [&o](CLI::App* sub) {
    sub->add_option("--mode", o.modes, "Restrict to these modes (ecb|cbc|ctr|ccm|gcm)");
    sub->add_option("--bits", o.bits, "Restrict to these key lengths (128|192|256)");
    sub->add_option("--format", o.format, "Output format (csv|json|table)");
    sub->add_option("--out", o.out, "Output path (default: standard output)");
  };
  auto add_key = [&o](CLI::App* sub) {
    sub->add_option("--key", o.key.hex, "Key as hex (32, 48 or 64 digits)");
    sub->add_option("--key-file", o.key.file, "File holding the key as hex");
    sub->add_option("--aad", o.aad, "Associated data as hex (ccm, gcm)");
    sub->add_option("--in", o.in, "Input file");
    sub->add_option("--out", o.out, "Output file");
  };

  auto* enc = app.add_subcommand("encrypt", "Encrypt a file into an AESL container");
  enc->add_option("--mode", o.mode, "ecb|cbc|ctr|ccm|gcm");
  enc->add_option("--bits", o.bits, "128|192|256");
  add_key(enc);
  enc->add_flag("--generate-key", o.key.generate, "Generate a fresh key from the OS CSPRNG");
  enc->add_option("--key-out", o.key.key_out, "Where --generate-key writes the key (default <out>.key)");
  enc->add_option("--iv", o.iv, "CBC IV or CTR first counter block, hex (testing only)");
  enc->add_option("--nonce", o.nonce, "CCM/GCM nonce, hex (testing only)");

  auto* dec = app.add_subcommand("decrypt", "Decrypt an AESL container");
  dec->add_option("--mode", o.mode, "Expected mode; rejected if the file differs");
  dec->add_option("--bits", o.bits, "Expected key length");
  add_key(dec);

  auto* eval = app.add_subcommand("evaluate", "Normalized Gini impurity of encrypted images");
  add_filters(eval);
  eval->add_option("--synth", o.synth, "Use the synthetic corpus with this seed");
  eval->add_option("images", o.images, "PGM/PPM files to evaluate");
  eval->add_option("--trials", o.trials, "Encryptions per cell, each with a fresh key and IV/nonce")
      ->check(CLI::PositiveNumber);
  eval->add_option("--param-seed", o.param_seed,
                   "Draw keys, IVs and nonces from a seeded generator (reproducible; testing only)");
  eval->add_option("--render-dir", o.render_dir, "Write cipher images as <image>_<mode>_<bits>.ppm");
  eval->add_flag("--timings", o.timings, "Include encryption/decryption times in the report");
  eval->add_option("--workers", o.workers, "Cells evaluated concurrently")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Encryption and decryption timing");
  add_filters(bench);
  bench->add_option("--payload", o.payloads, "Uniform payload size in octets (repeatable)");
  bench->add_option("--synth", o.synth, "Seed of the synthetic corpus payload (default 42)");
  bench->add_flag("--no-corpus", o.no_corpus, "Skip the synthetic corpus payload");
  bench->add_option("--reps", o.reps, "Timed repetitions per cell");
  bench->add_option("--warmup", o.warmup, "Discarded warmup repetitions per cell");
  bench->add_flag("--parallel-demo", o.parallel_demo,
                  "Also time ECB/CTR/GCM with all hardware threads");

  app.add_subcommand("vectors", "Run the embedded known-answer vectors");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*enc) return cmd_encrypt(o, err);
    if (*dec) return cmd_decrypt(o, err);
    if (*eval) return cmd_evaluate(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
    return cmd_vectors(out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    if (e.is_cryptographic_failure()) return kCryptoFailure;
    if (e.kind() == ErrorKind::Io || e.kind() == ErrorKind::Format) return kIoFailure;
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: i/o error: " << e.what() << "\n";
    return kIoFailure;
  }
}

}  // namespace aeslab::cli
