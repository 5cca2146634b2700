#include "dseq/recursive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "dseq/analysis.hpp"
#include "dseq/error.hpp"

namespace dseq {

namespace {

void require_distinct(std::vector<OddPrime> primes, const char* what) {
  if (primes.empty()) {
    throw Error(ErrorCode::InvalidArguments, std::string(what) + " primes are empty");
  }
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw Error(ErrorCode::InvalidArguments,
                std::string(what) + " primes must be pairwise distinct");
  }
}

// Order used by the period prediction: 1 for a residue of zero.
u64 outer_order(u64 value, u64 prime) {
  return value % prime == 0 ? 1 : multiplicative_order(value, prime);
}

}  // namespace

u64 inner_period(u64 seed, const std::vector<OddPrime>& inner_primes) {
  if (inner_primes.empty()) {
    throw Error(ErrorCode::InvalidArguments, "inner primes are empty");
  }
  std::vector<u64> orders;
  for (const auto& p : inner_primes) {
    if (seed % p.value() == 0) {
      throw Error(ErrorCode::NotCoprime, "seed " + std::to_string(seed) +
                                             " is not coprime to inner prime " +
                                             std::to_string(p.value()));
    }
    orders.push_back(multiplicative_order(seed, p));
  }
  return lcm_many(orders);
}

RecursiveConfig::RecursiveConfig(u64 seed, std::vector<OddPrime> inner_primes,
                                 std::vector<OddPrime> outer_primes,
                                 u64 outer_iterations, std::optional<u64> seedset_size)
    : seed_(seed),
      inner_(std::move(inner_primes)),
      outer_(std::move(outer_primes)),
      outer_iterations_(outer_iterations),
      seedset_size_(seedset_size),
      inner_period_(0) {
  if (seed_ < 2) throw Error(ErrorCode::InvalidArguments, "seed must be >= 2");
  require_distinct(inner_, "inner");
  require_distinct(outer_, "outer");
  if (outer_iterations_ < 1) {
    throw Error(ErrorCode::InvalidArguments, "outer iterations must be >= 1");
  }
  inner_period_ = dseq::inner_period(seed_, inner_);
  if (seedset_size_ && (*seedset_size_ < 1 || *seedset_size_ > inner_period_)) {
    throw Error(ErrorCode::InvalidArguments,
                "seedset size must be in [1, " + std::to_string(inner_period_) + "]");
  }
}

RecursiveConfig RecursiveConfig::with_outer_iterations(u64 u) const {
  return RecursiveConfig(seed_, inner_, outer_, u, seedset_size_);
}

SeedSet build_seedset(const RecursiveConfig& cfg) {
  const auto& inner = cfg.inner_primes();
  std::vector<u64> residues(inner.size(), 1);
  SeedSet out{{}, cfg.inner_period()};
  out.values.reserve(cfg.seedset_size());
  for (u64 q = 1; q <= cfg.seedset_size(); ++q) {
    u64 sum = 0;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      residues[j] = mul_mod(residues[j], cfg.seed(), inner[j]);
      if (__builtin_add_overflow(sum, residues[j], &sum)) {
        throw Error(ErrorCode::Overflow, "inner residue sum exceeds 64 bits");
      }
    }
    out.values.push_back(sum);
  }
  return out;
}

RecursiveCursor::RecursiveCursor(const RecursiveConfig& cfg)
    : width_(cfg.outer_primes().size()) {
  for (const auto& p : cfg.outer_primes()) outer_.push_back(p.value());
  for (u64 value : build_seedset(cfg).values) {
    for (u64 p : outer_) bases_.push_back(value % p);
  }
  powers_.assign(bases_.size(), 1);
}

std::uint8_t RecursiveCursor::next() {
  std::uint8_t bit = 0;
  const std::size_t row = q_ * width_;
  for (std::size_t r = 0; r < width_; ++r) {
    u64& power = powers_[row + r];
    power = mul_mod(power, bases_[row + r], outer_[r]);
    bit ^= power & 1u;
  }
  q_ = (q_ + 1) * width_ == bases_.size() ? 0 : q_ + 1;
  return bit;
}

BitStream generate(const RecursiveConfig& cfg) {
  u64 length;
  if (__builtin_mul_overflow(cfg.seedset_size(), cfg.outer_iterations(), &length)) {
    throw Error(ErrorCode::Overflow, "stream length exceeds 64 bits");
  }
  RecursiveCursor cursor(cfg);
  BitStream out;
  out.reserve(length);
  for (u64 n = 0; n < length; ++n) out.push_back(cursor.next());
  return out;
}

PeriodReport predict_period(const RecursiveConfig& cfg) {
  PeriodReport report;
  report.inner_period = cfg.inner_period();
  report.seedset = build_seedset(cfg).values;

  const auto& outer = cfg.outer_primes();
  std::map<std::pair<u64, u64>, u64> cache;
  report.order_matrix.reserve(report.seedset.size());
  for (u64 value : report.seedset) {
    std::vector<u64> row;
    for (const auto& p : outer) {
      const auto key = std::make_pair(value % p.value(), p.value());
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, outer_order(key.first, key.second)).first;
      }
      row.push_back(it->second);
    }
    report.order_matrix.push_back(std::move(row));
  }

  for (std::size_t r = 0; r < outer.size(); ++r) {
    u64 column = 1;
    for (const auto& row : report.order_matrix) column = checked_lcm(column, row[r]);
    report.per_prime_lcm.push_back(column);
  }
  report.outer_period = lcm_many(report.per_prime_lcm);
  if (__builtin_mul_overflow(report.outer_period, static_cast<u64>(report.seedset.size()),
                             &report.total_period)) {
    throw Error(ErrorCode::Overflow, "total period exceeds 64 bits");
  }
  for (const auto& p : cfg.inner_primes()) {
    report.seed_primitivity.push_back(is_primitive_root(cfg.seed(), p));
  }
  return report;
}

PeriodMeasurement measure_period(const RecursiveConfig& cfg, u64 max_bits) {
  PeriodMeasurement out{std::nullopt, max_bits, predict_period(cfg).total_period, {}};
  if (max_bits == 0) return out;

  RecursiveCursor cursor(cfg);
  std::vector<std::uint8_t> window(max_bits);
  for (auto& b : window) b = cursor.next();

  const std::size_t smallest = smallest_shift_period(window);
  if (smallest <= max_bits / 2) {
    out.period = smallest;
  } else if (out.predicted > max_bits / 2) {
    for (u64 d = 1; d < max_bits && d <= out.predicted; ++d) {
      if (out.predicted % d == 0 && holds_as_shift(window, d)) {
        out.holding_divisors.push_back(d);
      }
    }
  }
  return out;
}

bool check_single_inner_guarantee(const OddPrime& p11,
                                  const std::vector<OddPrime>& outer_primes,
                                  u64 seed) {
  if (outer_primes.empty()) {
    throw Error(ErrorCode::InvalidArguments, "outer primes are empty");
  }
  if (seed % p11.value() == 0 || !is_primitive_root(seed, p11)) {
    throw Error(ErrorCode::InvalidArguments,
                "seed " + std::to_string(seed) + " is not a primitive root of " +
                    std::to_string(p11.value()));
  }
  for (const auto& p : outer_primes) {
    if (p.value() >= p11.value()) {
      throw Error(ErrorCode::InvalidArguments,
                  "outer prime " + std::to_string(p.value()) + " is not below " +
                      std::to_string(p11.value()));
    }
  }

  const RecursiveConfig cfg(seed, {p11}, outer_primes, 1);
  const auto seedset = build_seedset(cfg).values;
  return std::all_of(outer_primes.begin(), outer_primes.end(), [&](const OddPrime& p) {
    return std::any_of(seedset.begin(), seedset.end(), [&](u64 s) {
      return s % p.value() != 0 && is_primitive_root(s, p);
    });
  });
}

}  // namespace dseq
