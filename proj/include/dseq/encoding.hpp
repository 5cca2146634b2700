#pragma once

// Bit stream serialization.
//   ascii01: one '0'/'1' character per bit, newline terminated.
//   hex:     4 bits per lowercase hex digit, MSB first, tail zero padded,
//            newline terminated.
//   packed:  raw bytes, MSB first, tail zero padded.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dseq/bitstream.hpp"

namespace dseq {

enum class Encoding { Ascii01, Hex, Packed };

std::string_view to_string(Encoding e) noexcept;
/// Throws InvalidArguments for unknown names.
Encoding parse_encoding(std::string_view name);

/// Writes bits one at a time in constant memory.
class BitWriter {
 public:
  BitWriter(std::ostream& out, Encoding encoding);
  BitWriter(const BitWriter&) = delete;
  BitWriter& operator=(const BitWriter&) = delete;
  ~BitWriter();

  void put(bool bit);
  /// Flushes the padded tail and the trailing newline. Idempotent.
  void finish();

  std::size_t bits_written() const noexcept { return count_; }

 private:
  std::ostream& out_;
  Encoding encoding_;
  unsigned pending_ = 0;
  unsigned pending_bits_ = 0;
  std::size_t count_ = 0;
  bool finished_ = false;
};

std::string encode_bits(const BitStream& bits, Encoding encoding);

/// Inverse of encode_bits. ASCII whitespace is ignored for the text
/// encodings. bit_count truncates the padded tail; without it every decoded
/// bit (padding included) is returned. Throws Decode with the byte offset of
/// the first offending byte.
BitStream decode_bits(std::string_view data, Encoding encoding,
                      std::optional<std::size_t> bit_count = std::nullopt);

}  // namespace dseq
