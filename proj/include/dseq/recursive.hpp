#pragma once

// Recursive d-sequence generator.
//
// The inner loop sums d-sequence residues of a seed S over the inner primes,
//   S_q = sum_j (S^q mod p_1j),        q = 1..w,
// and the outer loop raises each such value to successive powers k and XORs
// the low bits over the outer primes:
//   bit(k, q) = XOR_r ((S_q)^k mod p_2r) mod 2.
// Bits are emitted k-major: all q for k = 1, then all q for k = 2, and so on.
//
// The predicted period of the output is
//   P = lcm over (q, r) of ord(S_q mod p_2r, p_2r)  *  w,
// where an element divisible by p_2r contributes order 1 (its residue chain
// is constantly zero).

#include <cstddef>
#include <optional>
#include <vector>

#include "dseq/bitstream.hpp"
#include "dseq/numtheory.hpp"

namespace dseq {

class RecursiveConfig {
 public:
  /// Validates: seed >= 2 and coprime to every inner prime, both prime lists
  /// nonempty and pairwise distinct, outer_iterations >= 1, and
  /// 1 <= seedset_size <= inner period when given.
  RecursiveConfig(u64 seed, std::vector<OddPrime> inner_primes,
                  std::vector<OddPrime> outer_primes, u64 outer_iterations,
                  std::optional<u64> seedset_size = std::nullopt);

  u64 seed() const noexcept { return seed_; }
  const std::vector<OddPrime>& inner_primes() const noexcept { return inner_; }
  const std::vector<OddPrime>& outer_primes() const noexcept { return outer_; }
  u64 outer_iterations() const noexcept { return outer_iterations_; }
  const std::optional<u64>& requested_seedset_size() const noexcept {
    return seedset_size_;
  }

  /// t, the period of the inner residue sum.
  u64 inner_period() const noexcept { return inner_period_; }
  /// w: the requested size, or t.
  u64 seedset_size() const noexcept { return seedset_size_.value_or(inner_period_); }

  RecursiveConfig with_outer_iterations(u64 u) const;

 private:
  u64 seed_;
  std::vector<OddPrime> inner_;
  std::vector<OddPrime> outer_;
  u64 outer_iterations_;
  std::optional<u64> seedset_size_;
  u64 inner_period_;
};

struct SeedSet {
  std::vector<u64> values;
  u64 inner_period;

  std::size_t size() const noexcept { return values.size(); }
};

struct PeriodReport {
  u64 inner_period;
  std::vector<u64> seedset;
  /// order_matrix[q][r] = ord(S_{q+1}, p_2(r+1)), or 1 if p_2r | S_q.
  std::vector<std::vector<u64>> order_matrix;
  std::vector<u64> per_prime_lcm;
  u64 outer_period;
  u64 total_period;
  /// Whether the seed is a primitive root of each inner prime.
  std::vector<bool> seed_primitivity;

  u64 seedset_size() const noexcept { return seedset.size(); }
};

/// lcm of ord(seed, p) over the inner primes. Throws NotCoprime.
u64 inner_period(u64 seed, const std::vector<OddPrime>& inner_primes);

SeedSet build_seedset(const RecursiveConfig& cfg);

/// Unbounded k-major bit cursor; the outer iteration bound is not enforced.
class RecursiveCursor {
 public:
  explicit RecursiveCursor(const RecursiveConfig& cfg);

  std::uint8_t next();

 private:
  std::vector<u64> outer_;
  // Row-major w x m tables: base residues S_q mod p_2r and running powers.
  std::vector<u64> bases_;
  std::vector<u64> powers_;
  std::size_t width_;
  std::size_t q_ = 0;
};

/// Exactly seedset_size() * outer_iterations() bits.
BitStream generate(const RecursiveConfig& cfg);

PeriodReport predict_period(const RecursiveConfig& cfg);

struct PeriodMeasurement {
  /// Minimal period of the examined window, present only when it is at most
  /// half the window (so at least two full repetitions were observed).
  std::optional<u64> period;
  u64 bits_examined;
  u64 predicted;
  /// Filled when the prediction exceeds half the window: divisors of the
  /// prediction that hold as shifts over the whole window.
  std::vector<u64> holding_divisors;

  bool agrees() const noexcept { return period && *period == predicted; }
};

/// Brute-force period of the first max_bits output bits (independent of
/// outer_iterations).
PeriodMeasurement measure_period(const RecursiveConfig& cfg, u64 max_bits);

/// Single inner prime p11 > every outer prime and seed a primitive root of
/// p11: true iff for every outer prime the full-period SeedSet contains one of
/// its primitive roots. Throws InvalidArguments when a precondition fails.
bool check_single_inner_guarantee(const OddPrime& p11,
                                  const std::vector<OddPrime>& outer_primes,
                                  u64 seed);

}  // namespace dseq
