#include <doctest.h>

#include <random>

#include "dseq/error.hpp"
#include "dseq/numtheory.hpp"
#include "oracles.hpp"

using namespace dseq;

namespace {

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dseq::Error");
  return ErrorCode::InvalidArguments;
}

}  // namespace

TEST_CASE("mod_pow") {
  CHECK(mod_pow(2, 4, 5) == 1);
  CHECK(mod_pow(7, 0, 13) == 1);
  CHECK(mod_pow(5, 11, 23) == 22);
  CHECK(mod_pow(9, 0, 2) == 1);
  CHECK(mod_pow(4, 3, 2) == 0);
  CHECK(error_code_of([] { mod_pow(3, 3, 1); }) == ErrorCode::InvalidModulus);
  CHECK(error_code_of([] { mod_pow(3, 3, 0); }) == ErrorCode::InvalidModulus);

  // Fermat on moduli close to 2^63 exercises the 128-bit product path.
  const u64 mersenne61 = (u64{1} << 61) - 1;
  CHECK(mod_pow(3, mersenne61 - 1, mersenne61) == 1);
  const u64 big_prime = 9223372036854775783ull;  // largest prime below 2^63
  CHECK(mod_pow(123456789, big_prime - 1, big_prime) == 1);
  CHECK(mod_pow(big_prime - 1, 2, big_prime) == 1);
}

TEST_CASE("mod_pow matches a multiply loop on sampled triples") {
  std::mt19937_64 rng(20240601);
  for (int n = 0; n < 1000; ++n) {
    const u64 m = 2 + rng() % ((1u << 20) - 2);
    const u64 base = rng() % (1u << 20);
    const u64 exp = rng() % 3000;
    REQUIRE(mod_pow(base, exp, m) == oracle::pow_loop(base, exp, m));
  }
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(4, 7) == 3);
  CHECK(multiplicative_order(2, 11) == 10);
  CHECK(multiplicative_order(1, 97) == 1);
  CHECK(multiplicative_order(3, 2) == 1);
  CHECK(multiplicative_order(3, 8) == 2);
  CHECK(error_code_of([] { multiplicative_order(6, 9); }) == ErrorCode::NotCoprime);
  CHECK(error_code_of([] { multiplicative_order(7, 7); }) == ErrorCode::NotCoprime);
  CHECK(error_code_of([] { multiplicative_order(3, 1); }) == ErrorCode::InvalidModulus);

  const u64 p = 2305843009213693951ull;  // 2^61 - 1
  const u64 e = multiplicative_order(3, p);
  CHECK(mod_pow(3, e, p) == 1);
  CHECK((p - 1) % e == 0);
  CHECK(multiplicative_order(2, p) == 61);
}

TEST_CASE("multiplicative_order agrees with an exhaustive scan for a, m <= 200") {
  for (u64 m = 2; m <= 200; ++m) {
    for (u64 a = 1; a <= 200; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const u64 e = multiplicative_order(a, m);
      REQUIRE(e == oracle::order_scan(a, m));
      if (oracle::prime_trial(m)) REQUIRE((m - 1) % e == 0);
    }
  }
}

TEST_CASE("is_primitive_root") {
  CHECK(is_primitive_root(2, OddPrime(5)));
  CHECK_FALSE(is_primitive_root(2, OddPrime(23)));
  CHECK_FALSE(is_primitive_root(1, OddPrime(7)));
  CHECK(is_primitive_root(2, OddPrime(11)));
  CHECK(error_code_of([] { is_primitive_root(14, OddPrime(7)); }) == ErrorCode::NotCoprime);
  for (u64 p : oracle::odd_primes_below(100)) {
    for (u64 a = 1; a < p; ++a) {
      REQUIRE(is_primitive_root(a, OddPrime(p)) == oracle::primitive_scan(a, p));
    }
  }
}

TEST_CASE("lcm_many") {
  const std::vector<u64> a{2, 4}, b{6, 10}, c{7}, empty{};
  CHECK(lcm_many(a) == 4);
  CHECK(lcm_many(b) == 30);
  CHECK(lcm_many(c) == 7);
  CHECK(error_code_of([&] { lcm_many(empty); }) == ErrorCode::EmptyInput);
  const std::vector<u64> zero{3, 0};
  CHECK(error_code_of([&] { lcm_many(zero); }) == ErrorCode::InvalidArguments);
  const std::vector<u64> huge{(u64{1} << 62) + 1, (u64{1} << 62) - 1};
  CHECK(error_code_of([&] { lcm_many(huge); }) == ErrorCode::Overflow);

  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    std::vector<u64> v(1 + rng() % 4);
    for (auto& x : v) x = 1 + rng() % 60;
    const u64 l = lcm_many(v);
    for (u64 x : v) REQUIRE(l % x == 0);
    // Least: no proper divisor of l is a common multiple.
    for (u64 d = 1; d < l; ++d) {
      if (l % d != 0) continue;
      bool common = true;
      for (u64 x : v) common = common && d % x == 0;
      REQUIRE_FALSE(common);
    }
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(29));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9240));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::prime_trial(n));

  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK(is_prime(2305843009213693951ull));
  CHECK_FALSE(is_prime(561));                    // Carmichael
  CHECK_FALSE(is_prime(3215031751ull));          // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ull)); // strong pseudoprime to bases 2..23
  CHECK_FALSE(is_prime(18446744073709551615ull));
  CHECK_FALSE(is_prime(4294967291ull * 4294967279ull));
}

TEST_CASE("factorize and carmichael") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(4294967291ull * 4294967279ull) ==
        Factorization{{4294967279ull, 1}, {4294967291ull, 1}});
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    const u64 v = 1 + rng() % (u64{1} << 62);
    u64 product = 1;
    for (const auto& [p, e] : factorize(v)) {
      REQUIRE(is_prime(p));
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    REQUIRE(product == v);
  }
  // lambda(n) is the largest element order in (Z/nZ)*.
  for (u64 n = 2; n <= 300; ++n) {
    u64 largest = 1;
    for (u64 a = 1; a < n; ++a) {
      if (std::gcd(a, n) == 1) largest = std::max(largest, oracle::order_scan(a, n));
    }
    REQUIRE(carmichael(n) == largest);
  }
}

TEST_CASE("OddPrime and Modulus validation") {
  CHECK(OddPrime(3).value() == 3);
  CHECK(error_code_of([] { OddPrime(2); }) == ErrorCode::InvalidPrime);
  CHECK(error_code_of([] { OddPrime(4); }) == ErrorCode::InvalidPrime);
  CHECK(error_code_of([] { OddPrime(9); }) == ErrorCode::InvalidPrime);
  CHECK(error_code_of([] { Modulus(2); }) == ErrorCode::InvalidModulus);
  CHECK(error_code_of([] { Modulus(21, {{3, 1}, {5, 1}}); }) == ErrorCode::InvalidModulus);
  CHECK(error_code_of([] { Modulus(16, {{4, 2}}); }) == ErrorCode::InvalidModulus);
  const auto m = Modulus::factored(21);
  REQUIRE(m.factorization());
  CHECK(*m.factorization() == Factorization{{3, 1}, {7, 1}});
  CHECK_FALSE(Modulus(21).factorization());
}
