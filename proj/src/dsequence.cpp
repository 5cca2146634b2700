#include "dseq/dsequence.hpp"

#include <string>

#include "dseq/error.hpp"

namespace dseq {

DSeqConfig::DSeqConfig(OddPrime prime, u64 base, u64 start_index)
    : prime_(prime), base_(base), start_index_(start_index) {
  if (base < 2) {
    throw Error(ErrorCode::InvalidArguments, "base must be >= 2");
  }
  if (start_index < 1) {
    throw Error(ErrorCode::InvalidArguments, "start index must be >= 1");
  }
  if (base % prime.value() == 0) {
    throw Error(ErrorCode::NotCoprime, std::to_string(prime.value()) +
                                           " divides base " + std::to_string(base));
  }
}

u64 dseq_digit(u64 i, const DSeqConfig& cfg) {
  if (i < 1) throw Error(ErrorCode::InvalidArguments, "digit index must be >= 1");
  return mod_pow(cfg.base(), i, cfg.prime()) % cfg.base();
}

u64 reciprocal_digit(u64 i, const DSeqConfig& cfg) {
  if (i < 1) throw Error(ErrorCode::InvalidArguments, "digit index must be >= 1");
  const u64 p = cfg.prime();
  const u128 remainder = mod_pow(cfg.base(), i - 1, p);
  return static_cast<u64>(remainder * cfg.base() / p);
}

DSeqCursor::DSeqCursor(const DSeqConfig& cfg)
    : prime_(cfg.prime()),
      base_(cfg.base()),
      residue_(mod_pow(cfg.base(), cfg.start_index() - 1, cfg.prime())),
      index_(cfg.start_index()) {}

u64 DSeqCursor::next() {
  residue_ = mul_mod(residue_, base_, prime_);
  ++index_;
  return residue_ % base_;
}

std::vector<u64> dseq_stream(const DSeqConfig& cfg, std::size_t length) {
  if (length < 1) throw Error(ErrorCode::InvalidArguments, "length must be >= 1");
  std::vector<u64> out;
  out.reserve(length);
  DSeqCursor cursor(cfg);
  for (std::size_t j = 0; j < length; ++j) out.push_back(cursor.next());
  return out;
}

u64 dseq_period(const DSeqConfig& cfg) {
  return multiplicative_order(cfg.base(), cfg.prime());
}

bool verify_half_period_complement(const DSeqConfig& cfg) {
  if (cfg.base() != 2 || !is_primitive_root(2, cfg.prime())) {
    throw Error(ErrorCode::NotMaximumLength,
                "2 is not a primitive root of " + std::to_string(cfg.prime().value()));
  }
  const u64 half = (cfg.prime().value() - 1) / 2;
  DSeqConfig from_one(cfg.prime(), 2, 1);
  auto bits = dseq_stream(from_one, 2 * half);
  for (u64 i = 0; i < half; ++i) {
    if (bits[i + half] != 1 - bits[i]) return false;
  }
  return true;
}

}  // namespace dseq
