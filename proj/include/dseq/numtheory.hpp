#pragma once

// Exact 64-bit number theory. Products are formed in unsigned __int128, so all
// operands below 2^63 (and in practice below 2^64) are safe.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dseq {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// An odd prime, checked at construction.
class OddPrime {
 public:
  explicit OddPrime(u64 value);

  u64 value() const noexcept { return value_; }
  operator u64() const noexcept { return value_; }

  friend bool operator==(const OddPrime&, const OddPrime&) = default;
  friend auto operator<=>(const OddPrime&, const OddPrime&) = default;

 private:
  u64 value_;
};

/// A modulus >= 3, optionally carrying its prime factorization.
class Modulus {
 public:
  explicit Modulus(u64 value);
  Modulus(u64 value, Factorization factors);

  /// Builds a modulus and factors it.
  static Modulus factored(u64 value);

  u64 value() const noexcept { return value_; }
  const std::optional<Factorization>& factorization() const noexcept {
    return factors_;
  }

 private:
  u64 value_;
  std::optional<Factorization> factors_;
};

u64 mul_mod(u64 a, u64 b, u64 m) noexcept;

/// base^exponent mod modulus. Throws InvalidModulus when modulus < 2.
u64 mod_pow(u64 base, u64 exponent, u64 modulus);

/// Deterministic primality for the whole 64-bit range.
bool is_prime(u64 n) noexcept;

/// Prime factorization in increasing prime order. factorize(1) is empty.
Factorization factorize(u64 n);

/// Carmichael function lambda(n), the exponent of (Z/nZ)*.
u64 carmichael(u64 n);

/// Least e >= 1 with a^e = 1 (mod m). Throws NotCoprime when gcd(a, m) != 1.
u64 multiplicative_order(u64 a, u64 m);

/// True iff a has order p - 1 modulo p. Throws NotCoprime when p | a.
bool is_primitive_root(u64 a, const OddPrime& p);

/// Throws Overflow if the result does not fit in 64 bits.
u64 checked_lcm(u64 a, u64 b);

/// Throws EmptyInput for an empty list, InvalidArguments for a zero entry.
u64 lcm_many(std::span<const u64> values);

}  // namespace dseq
