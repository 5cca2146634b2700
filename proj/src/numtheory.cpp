#include "dseq/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "dseq/error.hpp"

namespace dseq {

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n must be odd and composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 batch = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

OddPrime::OddPrime(u64 value) : value_(value) {
  if (value < 3 || !is_prime(value)) {
    throw Error(ErrorCode::InvalidPrime,
                std::to_string(value) + " is not an odd prime");
  }
}

Modulus::Modulus(u64 value) : value_(value) {
  if (value < 3) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be >= 3, got " + std::to_string(value));
  }
}

Modulus::Modulus(u64 value, Factorization factors) : Modulus(value) {
  u128 product = 1;
  for (const auto& [p, e] : factors) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::InvalidModulus,
                  "factor " + std::to_string(p) + " is not prime");
    }
    for (unsigned i = 0; i < e; ++i) {
      product *= p;
      if (product > value) break;
    }
  }
  if (product != value) {
    throw Error(ErrorCode::InvalidModulus,
                "factorization does not multiply to " + std::to_string(value));
  }
  factors_ = std::move(factors);
}

Modulus Modulus::factored(u64 value) {
  if (value < 3) return Modulus(value);  // throws
  return Modulus(value, factorize(value));
}

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be >= 2, got " + std::to_string(modulus));
  }
  u64 result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1u) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : bases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every n < 3.3 * 10^24.
  return std::none_of(bases.begin(), bases.end(),
                      [&](u64 a) { return miller_rabin_witness(n, a, d, s); });
}

Factorization factorize(u64 n) {
  std::vector<u64> primes;
  if (n == 0) {
    throw Error(ErrorCode::InvalidArguments, "cannot factor 0");
  }
  for (u64 p = 2; p < (1u << 16) && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

u64 carmichael(u64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArguments, "carmichael(0)");
  u64 lambda = 1;
  for (const auto& [p, e] : factorize(n)) {
    u64 part;
    if (p == 2) {
      part = e == 1 ? 1 : (e == 2 ? 2 : u64{1} << (e - 2));
    } else {
      part = p - 1;
      for (unsigned i = 1; i < e; ++i) part *= p;
    }
    lambda = checked_lcm(lambda, part);
  }
  return lambda;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be >= 2, got " + std::to_string(m));
  }
  a %= m;
  if (std::gcd(a, m) != 1) {
    throw Error(ErrorCode::NotCoprime, std::to_string(a) + " is not coprime to " +
                                           std::to_string(m));
  }
  // The order divides lambda(m); strip prime factors while the power stays 1.
  u64 order = carmichael(m);
  for (const auto& [q, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % q == 0; ++i) {
      if (mod_pow(a, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

bool is_primitive_root(u64 a, const OddPrime& p) {
  if (a % p.value() == 0) {
    throw Error(ErrorCode::NotCoprime, std::to_string(p.value()) + " divides " +
                                           std::to_string(a));
  }
  return multiplicative_order(a, p.value()) == p.value() - 1;
}

u64 checked_lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) {
    throw Error(ErrorCode::InvalidArguments, "lcm of zero");
  }
  u64 q = a / std::gcd(a, b);
  u64 out;
  if (__builtin_mul_overflow(q, b, &out)) {
    throw Error(ErrorCode::Overflow, "lcm exceeds 64 bits");
  }
  return out;
}

u64 lcm_many(std::span<const u64> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "lcm of empty list");
  u64 acc = 1;
  for (u64 v : values) acc = checked_lcm(acc, v);
  return acc;
}

}  // namespace dseq
