#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dseq {

/// Ordered binary generator output. Every stored element is 0 or 1.
class BitStream {
 public:
  BitStream() = default;
  BitStream(std::initializer_list<int> bits);
  explicit BitStream(std::vector<std::uint8_t> bits);

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  /// First n bits (or all of them, if fewer).
  BitStream prefix(std::size_t n) const;

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace dseq
