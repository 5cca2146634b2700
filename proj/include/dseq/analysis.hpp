#pragma once

// Bipolar autocorrelation (0 -> -1, 1 -> +1), unnormalized and integer exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dseq/bitstream.hpp"

namespace dseq {

class BipolarSequence {
 public:
  BipolarSequence() = default;
  /// Throws InvalidArguments unless every value is -1 or +1.
  explicit BipolarSequence(std::vector<std::int8_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::int8_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int8_t> values() const noexcept { return values_; }

  friend bool operator==(const BipolarSequence&, const BipolarSequence&) = default;

 private:
  std::vector<std::int8_t> values_;
};

enum class CorrelationKind { Circular, Linear };

struct CorrelationSeries {
  CorrelationKind kind;
  std::size_t length_analyzed;
  /// values[lag], lag = 0, 1, ...
  std::vector<std::int64_t> values;
};

/// Largest window analyzed by default.
inline constexpr std::size_t kDefaultAnalysisWindow = 40000;

/// One full period if it fits in the default window, else the default window;
/// never more than `available`.
std::size_t default_analysis_window(std::optional<std::uint64_t> period,
                                    std::size_t available);

BipolarSequence to_bipolar(const BitStream& bits);

/// max_lag defaults to N - 1 and is clamped to it. Throws EmptyInput.
CorrelationSeries circular_autocorr(const BipolarSequence& seq,
                                    std::optional<std::size_t> max_lag = std::nullopt);
CorrelationSeries linear_autocorr(const BipolarSequence& seq,
                                  std::optional<std::size_t> max_lag = std::nullopt);

struct Balance {
  std::size_t ones;
  std::size_t zeros;

  friend bool operator==(const Balance&, const Balance&) = default;
};

Balance balance(const BitStream& bits);

/// Least p >= 1 with bits[n] == bits[n + p] for every n in the window
/// (the window length itself when nothing shorter works). Throws EmptyInput.
std::size_t smallest_shift_period(std::span<const std::uint8_t> bits);

/// Whether bits[n] == bits[n + shift] for every n in the window.
bool holds_as_shift(std::span<const std::uint8_t> bits, std::size_t shift);

}  // namespace dseq
