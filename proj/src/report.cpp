#include "dseq/report.hpp"

#include <algorithm>
#include <sstream>

namespace dseq {

namespace {

// Period published for seed 2, inner {5, 7}, outer {23, 29}. It is not a
// multiple of the SeedSet size 12, so it cannot be the period of this stream.
constexpr u64 kPublishedFigureRightPeriod = 3639;

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  return out.str();
}

std::vector<u64> values_of(const std::vector<OddPrime>& primes) {
  return {primes.begin(), primes.end()};
}

bool same_set(std::vector<OddPrime> a, std::vector<u64> b) {
  std::vector<u64> av = values_of(a);
  std::sort(av.begin(), av.end());
  std::sort(b.begin(), b.end());
  return av == b;
}

std::string verdict(const PeriodMeasurement& m) {
  if (!m.period) return "INCONCLUSIVE";
  return m.agrees() ? "AGREE" : "DISAGREE";
}

}  // namespace

std::vector<std::string> report_notes(const RecursiveConfig& cfg,
                                      const PeriodReport& report) {
  std::vector<std::string> notes;
  if (cfg.seed() == 2 && same_set(cfg.inner_primes(), {5, 7}) &&
      same_set(cfg.outer_primes(), {23, 29}) && !cfg.requested_seedset_size()) {
    std::ostringstream note;
    note << "published period for this configuration is " << kPublishedFigureRightPeriod
         << ", which is not a multiple of seedset_size=" << report.seedset_size()
         << "; computed total_period=" << report.total_period;
    notes.push_back(note.str());
  }
  return notes;
}

std::string format_period_report(const RecursiveConfig& cfg, const PeriodReport& report,
                                 const std::optional<PeriodMeasurement>& measured) {
  std::ostringstream out;
  out << "seed=" << cfg.seed() << '\n'
      << "inner_primes=" << join(values_of(cfg.inner_primes())) << '\n'
      << "outer_primes=" << join(values_of(cfg.outer_primes())) << '\n'
      << "inner_period=" << report.inner_period << '\n'
      << "seedset_size=" << report.seedset_size() << '\n'
      << "seedset=" << join(report.seedset) << '\n';
  for (std::size_t q = 0; q < report.order_matrix.size(); ++q) {
    for (std::size_t r = 0; r < report.order_matrix[q].size(); ++r) {
      out << "order[" << q + 1 << "][" << r + 1 << "]=" << report.order_matrix[q][r]
          << '\n';
    }
  }
  for (std::size_t r = 0; r < report.per_prime_lcm.size(); ++r) {
    out << "per_prime_lcm[" << r + 1 << "]=" << report.per_prime_lcm[r] << '\n';
  }
  out << "outer_period=" << report.outer_period << '\n'
      << "total_period=" << report.total_period << '\n';
  for (std::size_t j = 0; j < cfg.inner_primes().size(); ++j) {
    out << "seed_primitive[" << cfg.inner_primes()[j].value()
        << "]=" << (report.seed_primitivity[j] ? "true" : "false") << '\n';
  }
  if (measured) {
    out << "measured_bits=" << measured->bits_examined << '\n'
        << "measured_period="
        << (measured->period ? std::to_string(*measured->period) : std::string("none"))
        << '\n'
        << "verdict=" << verdict(*measured) << '\n';
    if (!measured->holding_divisors.empty()) {
      out << "holding_divisors=" << join(measured->holding_divisors) << '\n';
    }
  }
  for (const auto& note : report_notes(cfg, report)) out << "note=" << note << '\n';
  return out.str();
}

}  // namespace dseq
