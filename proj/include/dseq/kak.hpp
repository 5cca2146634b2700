#pragma once

// Combined d-sequence generators: the index XOR generator
//   a(i) = XOR_j (2^i mod p_j) mod 2
// and the power-exponent generator
//   a(j) = XOR_m (S^(2^j) mod m) mod 2,
// where the exponent schedule 1, 2, 4, 8, ... is realized by squaring the
// per-modulus residue once per step.

#include <cstddef>
#include <vector>

#include "dseq/bitstream.hpp"
#include "dseq/numtheory.hpp"

namespace dseq {

class KakIndexConfig {
 public:
  /// Throws InvalidArguments for an empty or repeating prime list.
  explicit KakIndexConfig(std::vector<OddPrime> primes);

  const std::vector<OddPrime>& primes() const noexcept { return primes_; }

 private:
  std::vector<OddPrime> primes_;
};

std::uint8_t kak_index_bit(u64 i, const KakIndexConfig& cfg);

/// Incremental form of kak_index_bit over consecutive indices.
class KakIndexCursor {
 public:
  explicit KakIndexCursor(const KakIndexConfig& cfg, u64 start_index = 1);

  std::uint8_t next();

 private:
  std::vector<u64> primes_;
  std::vector<u64> residues_;
};

/// Bits for indices start_index, start_index + 1, ...
BitStream kak_index_stream(const KakIndexConfig& cfg, std::size_t length,
                           u64 start_index = 1);

struct PeriodBound {
  u64 bound;
  /// True when 2 is a primitive root of every prime, so the residue tuple
  /// repeats with exactly `bound`.
  bool exact;

  friend bool operator==(const PeriodBound&, const PeriodBound&) = default;
};

/// bound = lcm(p_j - 1).
PeriodBound kak_index_period_bound(const KakIndexConfig& cfg);

class KakPowerConfig {
 public:
  /// Throws NotCoprime if the seed shares a factor with a modulus, and
  /// InvalidArguments if enforce_bbs_rule is set and some prime factor of a
  /// modulus is not 3 mod 4.
  KakPowerConfig(u64 seed, std::vector<Modulus> moduli, bool enforce_bbs_rule = false);

  u64 seed() const noexcept { return seed_; }
  const std::vector<Modulus>& moduli() const noexcept { return moduli_; }
  bool enforce_bbs_rule() const noexcept { return enforce_bbs_rule_; }

 private:
  u64 seed_;
  std::vector<Modulus> moduli_;
  bool enforce_bbs_rule_;
};

/// True iff every prime factor of m is congruent to 3 mod 4.
bool satisfies_bbs_rule(const Modulus& m);

class KakPowerCursor {
 public:
  explicit KakPowerCursor(const KakPowerConfig& cfg);

  std::uint8_t next();

 private:
  std::vector<u64> moduli_;
  std::vector<u64> residues_;
  bool started_ = false;
};

BitStream kak_power_stream(const KakPowerConfig& cfg, std::size_t length);

}  // namespace dseq
