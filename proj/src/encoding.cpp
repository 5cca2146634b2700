#include "dseq/encoding.hpp"

#include <sstream>

#include "dseq/error.hpp"

namespace dseq {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

bool is_space(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

[[noreturn]] void bad_byte(std::size_t offset, char c, Encoding e) {
  std::ostringstream msg;
  msg << "cannot decode " << to_string(e) << " input at byte offset " << offset
      << " (byte 0x" << kHexDigits[(static_cast<unsigned char>(c) >> 4) & 0xf]
      << kHexDigits[static_cast<unsigned char>(c) & 0xf] << ")";
  throw Error(ErrorCode::Decode, msg.str());
}

}  // namespace

std::string_view to_string(Encoding e) noexcept {
  switch (e) {
    case Encoding::Ascii01: return "ascii01";
    case Encoding::Hex: return "hex";
    case Encoding::Packed: return "packed";
  }
  return "unknown";
}

Encoding parse_encoding(std::string_view name) {
  if (name == "ascii01") return Encoding::Ascii01;
  if (name == "hex") return Encoding::Hex;
  if (name == "packed") return Encoding::Packed;
  throw Error(ErrorCode::InvalidArguments, "unknown encoding '" + std::string(name) + "'");
}

BitWriter::BitWriter(std::ostream& out, Encoding encoding)
    : out_(out), encoding_(encoding) {}

BitWriter::~BitWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void BitWriter::put(bool bit) {
  ++count_;
  switch (encoding_) {
    case Encoding::Ascii01:
      out_.put(bit ? '1' : '0');
      return;
    case Encoding::Hex:
      pending_ = (pending_ << 1) | (bit ? 1u : 0u);
      if (++pending_bits_ == 4) {
        out_.put(kHexDigits[pending_]);
        pending_ = pending_bits_ = 0;
      }
      return;
    case Encoding::Packed:
      pending_ = (pending_ << 1) | (bit ? 1u : 0u);
      if (++pending_bits_ == 8) {
        out_.put(static_cast<char>(pending_));
        pending_ = pending_bits_ = 0;
      }
      return;
  }
}

void BitWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (pending_bits_ != 0) {
    if (encoding_ == Encoding::Hex) {
      out_.put(kHexDigits[pending_ << (4 - pending_bits_)]);
    } else {
      out_.put(static_cast<char>(pending_ << (8 - pending_bits_)));
    }
    pending_ = pending_bits_ = 0;
  }
  if (encoding_ != Encoding::Packed) out_.put('\n');
  out_.flush();
}

std::string encode_bits(const BitStream& bits, Encoding encoding) {
  std::ostringstream out;
  {
    BitWriter writer(out, encoding);
    for (auto b : bits) writer.put(b != 0);
  }
  return out.str();
}

BitStream decode_bits(std::string_view data, Encoding encoding,
                      std::optional<std::size_t> bit_count) {
  BitStream out;
  for (std::size_t offset = 0; offset < data.size(); ++offset) {
    const char c = data[offset];
    switch (encoding) {
      case Encoding::Ascii01:
        if (c == '0' || c == '1') {
          out.push_back(c == '1');
        } else if (!is_space(c)) {
          bad_byte(offset, c, encoding);
        }
        break;
      case Encoding::Hex: {
        if (is_space(c)) break;
        const int v = hex_value(c);
        if (v < 0) bad_byte(offset, c, encoding);
        for (int s = 3; s >= 0; --s) out.push_back((v >> s) & 1);
        break;
      }
      case Encoding::Packed: {
        const auto v = static_cast<unsigned char>(c);
        for (int s = 7; s >= 0; --s) out.push_back((v >> s) & 1);
        break;
      }
    }
  }
  if (bit_count) {
    if (*bit_count > out.size()) {
      throw Error(ErrorCode::Decode, "input holds " + std::to_string(out.size()) +
                                         " bits, fewer than the requested " +
                                         std::to_string(*bit_count));
    }
    return out.prefix(*bit_count);
  }
  return out;
}

}  // namespace dseq
