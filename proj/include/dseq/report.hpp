#pragma once

// Line-oriented key=value rendering of a period prediction, plus the built-in
// reproduction suite for the worked examples.

#include <optional>
#include <string>
#include <vector>

#include "dseq/recursive.hpp"

namespace dseq {

/// Keys, in order: seed, inner_primes, outer_primes, inner_period,
/// seedset_size, seedset, order[q][r] (1-based), per_prime_lcm[r],
/// outer_period, total_period, seed_primitive[p]; with a measurement also
/// measured_bits, measured_period (or "none"), verdict (AGREE/DISAGREE/
/// INCONCLUSIVE) and holding_divisors when present; note lines last.
std::string format_period_report(const RecursiveConfig& cfg, const PeriodReport& report,
                                 const std::optional<PeriodMeasurement>& measured);

/// Notes attached to particular configurations (a published period that the
/// brute-force measurement contradicts).
std::vector<std::string> report_notes(const RecursiveConfig& cfg, const PeriodReport& report);

struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed;
  std::string note;
};

struct VerifyOptions {
  /// Negative control: runs the inner loop one step short (w = t - 1).
  bool inject_off_by_one = false;
};

std::vector<VerifyCheck> run_reproduction_suite(const VerifyOptions& options = {});

}  // namespace dseq
