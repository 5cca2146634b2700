#pragma once

// Plain d-sequences: digit i is (base^i mod p) mod base, i >= 1.

#include <cstddef>
#include <vector>

#include "dseq/numtheory.hpp"

namespace dseq {

class DSeqConfig {
 public:
  /// Throws InvalidArguments when base < 2, start_index < 1 or prime | base.
  explicit DSeqConfig(OddPrime prime, u64 base = 2, u64 start_index = 1);

  const OddPrime& prime() const noexcept { return prime_; }
  u64 base() const noexcept { return base_; }
  u64 start_index() const noexcept { return start_index_; }

 private:
  OddPrime prime_;
  u64 base_;
  u64 start_index_;
};

u64 dseq_digit(u64 i, const DSeqConfig& cfg);

/// The i-th base-r digit of the expansion of 1/p, i.e.
/// floor(base * (base^(i-1) mod p) / p). Equal to dseq_digit when base = 2.
u64 reciprocal_digit(u64 i, const DSeqConfig& cfg);

/// Incremental generator: keeps the running residue base^i mod p.
class DSeqCursor {
 public:
  explicit DSeqCursor(const DSeqConfig& cfg);

  u64 next();
  u64 index() const noexcept { return index_; }

 private:
  u64 prime_;
  u64 base_;
  u64 residue_;
  u64 index_;
};

std::vector<u64> dseq_stream(const DSeqConfig& cfg, std::size_t length);

/// multiplicative_order(base, prime).
u64 dseq_period(const DSeqConfig& cfg);

/// For a maximum-length binary d-sequence, checks a(i + (p-1)/2) = 1 - a(i).
/// Throws NotMaximumLength if base != 2 or 2 is not a primitive root of p.
bool verify_half_period_complement(const DSeqConfig& cfg);

}  // namespace dseq
