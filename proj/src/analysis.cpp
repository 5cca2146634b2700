#include "dseq/analysis.hpp"

#include <algorithm>

#include "dseq/error.hpp"

namespace dseq {

BipolarSequence::BipolarSequence(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
  if (std::any_of(values_.begin(), values_.end(),
                  [](std::int8_t v) { return v != 1 && v != -1; })) {
    throw Error(ErrorCode::InvalidArguments, "bipolar values must be -1 or +1");
  }
}

std::size_t default_analysis_window(std::optional<std::uint64_t> period,
                                    std::size_t available) {
  std::size_t window = kDefaultAnalysisWindow;
  if (period && *period <= kDefaultAnalysisWindow) {
    window = static_cast<std::size_t>(*period);
  }
  return std::min(window, available);
}

BipolarSequence to_bipolar(const BitStream& bits) {
  std::vector<std::int8_t> out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? 1 : -1);
  return BipolarSequence(std::move(out));
}

namespace {

std::size_t last_lag(const BipolarSequence& seq, std::optional<std::size_t> max_lag) {
  if (seq.empty()) throw Error(ErrorCode::EmptyInput, "empty sequence");
  return std::min(max_lag.value_or(seq.size() - 1), seq.size() - 1);
}

}  // namespace

CorrelationSeries circular_autocorr(const BipolarSequence& seq,
                                    std::optional<std::size_t> max_lag) {
  const std::size_t last = last_lag(seq, max_lag);
  const std::size_t n = seq.size();
  // Doubling the sequence turns the wraparound index into a plain offset.
  std::vector<std::int8_t> doubled(seq.values().begin(), seq.values().end());
  doubled.insert(doubled.end(), seq.values().begin(), seq.values().end());

  CorrelationSeries out{CorrelationKind::Circular, n, {}};
  out.values.reserve(last + 1);
  // |sum| <= n, and n is bounded by the caller's memory long before 2^31.
  for (std::size_t lag = 0; lag <= last; ++lag) {
    std::int32_t sum = 0;
    const std::int8_t* shifted = doubled.data() + lag;
    for (std::size_t i = 0; i < n; ++i) sum += doubled[i] * shifted[i];
    out.values.push_back(sum);
  }
  return out;
}

CorrelationSeries linear_autocorr(const BipolarSequence& seq,
                                  std::optional<std::size_t> max_lag) {
  const std::size_t last = last_lag(seq, max_lag);
  const std::size_t n = seq.size();
  const auto v = seq.values();

  CorrelationSeries out{CorrelationKind::Linear, n, {}};
  out.values.reserve(last + 1);
  for (std::size_t lag = 0; lag <= last; ++lag) {
    std::int32_t sum = 0;
    for (std::size_t i = 0; i + lag < n; ++i) sum += v[i] * v[i + lag];
    out.values.push_back(sum);
  }
  return out;
}

Balance balance(const BitStream& bits) {
  const auto ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
  return {ones, bits.size() - ones};
}

std::size_t smallest_shift_period(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw Error(ErrorCode::EmptyInput, "empty window");
  // Prefix function: border[i] is the longest proper border of bits[0..i].
  std::vector<std::size_t> border(bits.size(), 0);
  for (std::size_t i = 1; i < bits.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && bits[i] != bits[k]) k = border[k - 1];
    if (bits[i] == bits[k]) ++k;
    border[i] = k;
  }
  return bits.size() - border.back();
}

bool holds_as_shift(std::span<const std::uint8_t> bits, std::size_t shift) {
  if (shift >= bits.size()) return true;
  return std::equal(bits.begin(), bits.end() - static_cast<std::ptrdiff_t>(shift),
                    bits.begin() + static_cast<std::ptrdiff_t>(shift));
}

}  // namespace dseq
