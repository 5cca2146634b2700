#include "dseq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "dseq/analysis.hpp"
#include "dseq/dsequence.hpp"
#include "dseq/encoding.hpp"
#include "dseq/error.hpp"
#include "dseq/kak.hpp"
#include "dseq/recursive.hpp"
#include "dseq/report.hpp"

namespace dseq::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<OddPrime> to_primes(const std::vector<u64>& values) {
  return {values.begin(), values.end()};
}

CLI::Option* add_encoding(CLI::App* cmd, std::string& target) {
  return cmd->add_option("--encoding", target, "Output encoding")
      ->check(CLI::IsMember({"ascii01", "hex", "packed"}))
      ->capture_default_str();
}

void write_bits(std::ostream& out, Encoding encoding, u64 length,
                const std::function<bool()>& next) {
  BitWriter writer(out, encoding);
  for (u64 n = 0; n < length; ++n) writer.put(next());
  writer.finish();
}

struct DseqArgs {
  u64 prime = 0;
  u64 base = 2;
  u64 length = 0;
  u64 start_index = 1;
  std::string encoding = "ascii01";
};

void cmd_dseq(const DseqArgs& a, std::ostream& out) {
  const DSeqConfig cfg(OddPrime(a.prime), a.base, a.start_index);
  const Encoding encoding = parse_encoding(a.encoding);
  DSeqCursor cursor(cfg);
  if (cfg.base() == 2) {
    write_bits(out, encoding, a.length, [&] { return cursor.next() != 0; });
    return;
  }
  if (encoding != Encoding::Ascii01) {
    throw Error(ErrorCode::InvalidArguments, "hex and packed encodings require base 2");
  }
  for (u64 n = 0; n < a.length; ++n) {
    const u64 digit = cursor.next();
    if (cfg.base() <= 10) {
      out.put(static_cast<char>('0' + digit));
    } else {
      out << (n ? "," : "") << digit;
    }
  }
  out << '\n';
}

struct KakIndexArgs {
  std::vector<u64> primes;
  u64 length = 0;
  u64 start_index = 1;
  std::string encoding = "ascii01";
};

void cmd_kak_index(const KakIndexArgs& a, std::ostream& out) {
  const KakIndexConfig cfg(to_primes(a.primes));
  KakIndexCursor cursor(cfg, a.start_index);
  write_bits(out, parse_encoding(a.encoding), a.length, [&] { return cursor.next() != 0; });
}

struct KakPowerArgs {
  u64 seed = 0;
  std::vector<u64> moduli;
  u64 length = 0;
  bool enforce_bbs = false;
  std::string encoding = "ascii01";
};

void cmd_kak_power(const KakPowerArgs& a, std::ostream& out) {
  std::vector<Modulus> moduli;
  for (u64 m : a.moduli) moduli.push_back(Modulus::factored(m));
  const KakPowerConfig cfg(a.seed, std::move(moduli), a.enforce_bbs);
  KakPowerCursor cursor(cfg);
  write_bits(out, parse_encoding(a.encoding), a.length, [&] { return cursor.next() != 0; });
}

struct RecursiveArgs {
  u64 seed = 0;
  std::vector<u64> inner;
  std::vector<u64> outer;
  u64 iterations = 1;
  std::optional<u64> seedset_size;
  std::optional<u64> length;
  std::string encoding = "ascii01";
  std::optional<u64> measure;
};

RecursiveConfig make_recursive(const RecursiveArgs& a) {
  return RecursiveConfig(a.seed, to_primes(a.inner), to_primes(a.outer), a.iterations,
                         a.seedset_size);
}

void cmd_recursive(const RecursiveArgs& a, std::ostream& out) {
  const auto cfg = make_recursive(a);
  u64 full;
  if (__builtin_mul_overflow(cfg.seedset_size(), cfg.outer_iterations(), &full)) {
    throw Error(ErrorCode::Overflow, "stream length exceeds 64 bits");
  }
  if (a.length && *a.length > full) {
    throw Error(ErrorCode::InvalidArguments,
                "length " + std::to_string(*a.length) + " exceeds w * u = " +
                    std::to_string(full));
  }
  RecursiveCursor cursor(cfg);
  write_bits(out, parse_encoding(a.encoding), a.length.value_or(full),
             [&] { return cursor.next() != 0; });
}

void cmd_period(const RecursiveArgs& a, std::ostream& out) {
  const auto cfg = make_recursive(a);
  const auto report = predict_period(cfg);
  std::optional<PeriodMeasurement> measured;
  if (a.measure) measured = measure_period(cfg, *a.measure);
  out << format_period_report(cfg, report, measured);
}

struct AutocorrArgs {
  std::string input = "-";
  std::string mode = "circular";
  std::optional<std::size_t> max_lag;
  std::optional<std::size_t> window;
  std::string input_encoding = "ascii01";
  std::optional<std::size_t> bit_count;
};

void cmd_autocorr(const AutocorrArgs& a, std::istream& in, std::ostream& out) {
  std::string data;
  if (a.input == "-") {
    data.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(a.input, std::ios::binary);
    if (!file) throw IoError("cannot open '" + a.input + "'");
    data.assign(std::istreambuf_iterator<char>(file), {});
    if (file.bad()) throw IoError("error reading '" + a.input + "'");
  }
  const BitStream bits = decode_bits(data, parse_encoding(a.input_encoding), a.bit_count);
  if (bits.empty()) throw Error(ErrorCode::EmptyInput, "input contains no bits");

  std::size_t window = std::min(bits.size(), kDefaultAnalysisWindow);
  if (a.window) {
    if (*a.window < 1 || *a.window > bits.size()) {
      throw Error(ErrorCode::InvalidArguments,
                  "window must be in [1, " + std::to_string(bits.size()) + "]");
    }
    window = *a.window;
  }
  const auto seq = to_bipolar(bits.prefix(window));
  const auto series = a.mode == "linear" ? linear_autocorr(seq, a.max_lag)
                                         : circular_autocorr(seq, a.max_lag);
  std::string csv = "lag,value\n";
  for (std::size_t lag = 0; lag < series.values.size(); ++lag) {
    csv += std::to_string(lag);
    csv += ',';
    csv += std::to_string(series.values[lag]);
    csv += '\n';
  }
  out << csv;
}

int cmd_verify(bool inject_fault, std::ostream& out) {
  const auto checks = run_reproduction_suite({inject_fault});
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " expected=" << c.expected
        << " actual=" << c.actual << '\n';
    if (!c.note.empty()) out << "  note: " << c.note << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << passed << '/' << checks.size() << " checks passed\n";
  return passed == checks.size() ? kExitOk : kExitVerifyFailed;
}

void add_recursive_options(CLI::App* cmd, RecursiveArgs& a) {
  cmd->add_option("--seed", a.seed, "Seed S")->required();
  cmd->add_option("--inner", a.inner, "Inner primes")->required()->delimiter(',');
  cmd->add_option("--outer", a.outer, "Outer primes")->required()->delimiter(',');
  cmd->add_option("-w,--seedset-size", a.seedset_size, "SeedSet size (default: inner period)");
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"d-sequence pseudorandom bit generators", "dseqrng"};
  app.require_subcommand(1);

  DseqArgs dseq_args;
  auto* dseq = app.add_subcommand("dseq", "Plain d-sequence digits (base^i mod p) mod base");
  dseq->add_option("--prime", dseq_args.prime, "Odd prime p")->required();
  dseq->add_option("--base", dseq_args.base, "Base r")->capture_default_str();
  dseq->add_option("--length", dseq_args.length, "Number of digits")
      ->required()
      ->check(CLI::PositiveNumber);
  dseq->add_option("--start-index", dseq_args.start_index, "First index i")
      ->check(CLI::PositiveNumber);
  add_encoding(dseq, dseq_args.encoding);

  KakIndexArgs kak_index_args;
  auto* kak_index = app.add_subcommand("kak-index", "XOR of binary d-sequences");
  kak_index->add_option("--primes", kak_index_args.primes, "Odd primes")
      ->required()
      ->delimiter(',');
  kak_index->add_option("--length", kak_index_args.length, "Number of bits")
      ->required()
      ->check(CLI::PositiveNumber);
  kak_index->add_option("--start-index", kak_index_args.start_index, "First index i")
      ->check(CLI::PositiveNumber);
  add_encoding(kak_index, kak_index_args.encoding);

  KakPowerArgs kak_power_args;
  auto* kak_power = app.add_subcommand("kak-power", "Power-exponent (iterated squaring) generator");
  kak_power->add_option("--seed", kak_power_args.seed, "Seed S")->required();
  kak_power->add_option("--moduli", kak_power_args.moduli, "Prime or composite moduli")
      ->required()
      ->delimiter(',');
  kak_power->add_option("--length", kak_power_args.length, "Number of bits")
      ->required()
      ->check(CLI::PositiveNumber);
  kak_power->add_flag("--enforce-bbs", kak_power_args.enforce_bbs,
                      "Require every prime factor to be 3 mod 4");
  add_encoding(kak_power, kak_power_args.encoding);

  RecursiveArgs recursive_args;
  auto* recursive = app.add_subcommand("recursive", "Recursive d-sequence generator");
  add_recursive_options(recursive, recursive_args);
  recursive->add_option("-u,--outer-iterations", recursive_args.iterations,
                        "Outer loop bound u")
      ->required()
      ->check(CLI::PositiveNumber);
  recursive->add_option("--length", recursive_args.length, "Truncate to this many bits")
      ->check(CLI::PositiveNumber);
  add_encoding(recursive, recursive_args.encoding);

  RecursiveArgs period_args;
  auto* period = app.add_subcommand("period", "Predicted (and optionally measured) period");
  add_recursive_options(period, period_args);
  period->add_option("--measure", period_args.measure, "Measure over this many bits")
      ->check(CLI::PositiveNumber);

  AutocorrArgs autocorr_args;
  auto* autocorr = app.add_subcommand("autocorr", "Unnormalized bipolar autocorrelation as CSV");
  autocorr->add_option("--input", autocorr_args.input, "Input file, '-' for stdin")
      ->capture_default_str();
  autocorr->add_option("--mode", autocorr_args.mode, "circular or linear")
      ->check(CLI::IsMember({"circular", "linear"}))
      ->capture_default_str();
  autocorr->add_option("--max-lag", autocorr_args.max_lag, "Largest lag");
  autocorr->add_option("--window", autocorr_args.window, "Bits analyzed (default min(N, 40000))");
  autocorr->add_option("--input-encoding", autocorr_args.input_encoding, "Input encoding")
      ->check(CLI::IsMember({"ascii01", "hex", "packed"}))
      ->capture_default_str();
  autocorr->add_option("--bit-count", autocorr_args.bit_count,
                       "Bits to keep after decoding (drops hex/packed padding)");

  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Reproduce the worked examples");
  // Negative control for the suite itself; intentionally undocumented.
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*dseq) cmd_dseq(dseq_args, out);
    if (*kak_index) cmd_kak_index(kak_index_args, out);
    if (*kak_power) cmd_kak_power(kak_power_args, out);
    if (*recursive) cmd_recursive(recursive_args, out);
    if (*period) cmd_period(period_args, out);
    if (*autocorr) cmd_autocorr(autocorr_args, in, out);
    if (*verify) return cmd_verify(inject_fault, out);
  } catch (const IoError& e) {
    err << "dseqrng: io-error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "dseqrng: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitValidation;
  }
  if (!out) {
    err << "dseqrng: io-error: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace dseq::cli
