#include "dseq/bitstream.hpp"

#include <algorithm>

#include "dseq/error.hpp"

namespace dseq {

BitStream::BitStream(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw Error(ErrorCode::InvalidArguments, "bit values must be 0 or 1");
    }
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitStream::BitStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](auto b) { return b > 1; })) {
    throw Error(ErrorCode::InvalidArguments, "bit values must be 0 or 1");
  }
}

BitStream BitStream::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return BitStream(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
}

}  // namespace dseq
