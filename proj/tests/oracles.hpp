#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's arithmetic, so a bug there cannot hide behind its own output.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 pow_loop(u64 base, u64 exponent, u64 modulus) {
  u64 result = 1 % modulus;
  base %= modulus;
  for (u64 i = 0; i < exponent; ++i) result = result * base % modulus;  // modulus < 2^32
  return result;
}

inline u64 order_scan(u64 a, u64 m) {
  a %= m;
  u64 x = a;
  u64 e = 1;
  while (x != 1) {
    x = x * a % m;
    ++e;
  }
  return e;
}

inline bool prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool primitive_scan(u64 a, u64 p) { return a % p != 0 && order_scan(a, p) == p - 1; }

inline std::vector<u64> odd_primes_below(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 3; n < limit; ++n) {
    if (prime_trial(n)) out.push_back(n);
  }
  return out;
}

/// S_q = sum_j S^q mod p_j for q = 1..w.
inline std::vector<u64> seedset(u64 seed, const std::vector<u64>& inner, u64 w) {
  std::vector<u64> out;
  for (u64 q = 1; q <= w; ++q) {
    u64 sum = 0;
    for (u64 p : inner) sum += pow_loop(seed, q, p);
    out.push_back(sum);
  }
  return out;
}

/// Recursive generator evaluated term by term from its definition.
inline std::vector<std::uint8_t> recursive_bits(u64 seed, const std::vector<u64>& inner,
                                                const std::vector<u64>& outer, u64 w,
                                                u64 length) {
  const auto s = seedset(seed, inner, w);
  std::vector<std::uint8_t> out;
  for (u64 k = 1; out.size() < length; ++k) {
    for (u64 q = 0; q < w && out.size() < length; ++q) {
      std::uint8_t bit = 0;
      for (u64 p : outer) bit ^= pow_loop(s[q], k, p) % 2;
      out.push_back(bit);
    }
  }
  return out;
}

/// Least p <= n/2 with bits[i] == bits[i + p] across the window.
inline std::optional<std::size_t> min_period_scan(const std::vector<std::uint8_t>& bits) {
  for (std::size_t p = 1; p <= bits.size() / 2; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < bits.size() && ok; ++i) ok = bits[i] == bits[i + p];
    if (ok) return p;
  }
  return std::nullopt;
}

inline std::vector<std::int64_t> circular_sum(const std::vector<int>& b) {
  const std::size_t n = b.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < n; ++i) out[t] += b[i] * b[(i + t) % n];
  }
  return out;
}

}  // namespace oracle
