#include "dseq/kak.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dseq/error.hpp"

namespace dseq {

KakIndexConfig::KakIndexConfig(std::vector<OddPrime> primes)
    : primes_(std::move(primes)) {
  if (primes_.empty()) {
    throw Error(ErrorCode::InvalidArguments, "at least one prime is required");
  }
  auto sorted = primes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArguments, "primes must be pairwise distinct");
  }
}

std::uint8_t kak_index_bit(u64 i, const KakIndexConfig& cfg) {
  if (i < 1) throw Error(ErrorCode::InvalidArguments, "index must be >= 1");
  std::uint8_t bit = 0;
  for (const auto& p : cfg.primes()) bit ^= mod_pow(2, i, p) & 1u;
  return bit;
}

KakIndexCursor::KakIndexCursor(const KakIndexConfig& cfg, u64 start_index) {
  if (start_index < 1) throw Error(ErrorCode::InvalidArguments, "index must be >= 1");
  for (const auto& p : cfg.primes()) {
    primes_.push_back(p.value());
    residues_.push_back(mod_pow(2, start_index - 1, p));
  }
}

std::uint8_t KakIndexCursor::next() {
  std::uint8_t bit = 0;
  for (std::size_t k = 0; k < residues_.size(); ++k) {
    residues_[k] = mul_mod(residues_[k], 2, primes_[k]);
    bit ^= residues_[k] & 1u;
  }
  return bit;
}

BitStream kak_index_stream(const KakIndexConfig& cfg, std::size_t length,
                           u64 start_index) {
  KakIndexCursor cursor(cfg, start_index);
  BitStream out;
  out.reserve(length);
  for (std::size_t j = 0; j < length; ++j) out.push_back(cursor.next());
  return out;
}

PeriodBound kak_index_period_bound(const KakIndexConfig& cfg) {
  std::vector<u64> totients;
  bool exact = true;
  for (const auto& p : cfg.primes()) {
    totients.push_back(p.value() - 1);
    exact = exact && is_primitive_root(2, p);
  }
  return {lcm_many(totients), exact};
}

bool satisfies_bbs_rule(const Modulus& m) {
  Factorization factors =
      m.factorization() ? *m.factorization() : factorize(m.value());
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.prime % 4 == 3; });
}

KakPowerConfig::KakPowerConfig(u64 seed, std::vector<Modulus> moduli,
                               bool enforce_bbs_rule)
    : seed_(seed), moduli_(std::move(moduli)), enforce_bbs_rule_(enforce_bbs_rule) {
  if (seed < 1) throw Error(ErrorCode::InvalidArguments, "seed must be >= 1");
  if (moduli_.empty()) {
    throw Error(ErrorCode::InvalidArguments, "at least one modulus is required");
  }
  for (const auto& m : moduli_) {
    if (std::gcd(seed, m.value()) != 1) {
      throw Error(ErrorCode::NotCoprime, "seed " + std::to_string(seed) +
                                             " is not coprime to modulus " +
                                             std::to_string(m.value()));
    }
    if (enforce_bbs_rule && !satisfies_bbs_rule(m)) {
      throw Error(ErrorCode::InvalidArguments,
                  "modulus " + std::to_string(m.value()) +
                      " has a prime factor not congruent to 3 mod 4");
    }
  }
}

KakPowerCursor::KakPowerCursor(const KakPowerConfig& cfg) {
  for (const auto& m : cfg.moduli()) {
    moduli_.push_back(m.value());
    residues_.push_back(cfg.seed() % m.value());
  }
}

std::uint8_t KakPowerCursor::next() {
  if (started_) {
    for (std::size_t k = 0; k < residues_.size(); ++k) {
      residues_[k] = mul_mod(residues_[k], residues_[k], moduli_[k]);
    }
  }
  started_ = true;
  std::uint8_t bit = 0;
  for (u64 r : residues_) bit ^= r & 1u;
  return bit;
}

BitStream kak_power_stream(const KakPowerConfig& cfg, std::size_t length) {
  if (length < 1) throw Error(ErrorCode::InvalidArguments, "length must be >= 1");
  KakPowerCursor cursor(cfg);
  BitStream out;
  out.reserve(length);
  for (std::size_t j = 0; j < length; ++j) out.push_back(cursor.next());
  return out;
}

}  // namespace dseq
