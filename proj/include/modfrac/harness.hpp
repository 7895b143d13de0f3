#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modfrac/oracle.hpp"
#include "modfrac/residues.hpp"

namespace modfrac {

enum class Check {
  Determinant,  ///< pos.n*neg.d - neg.n*pos.d == M on every trace pair
  SqrtBound,    ///< sqrt_bound_witness succeeds for every x
  Minimality,   ///< every trace pair passes the brute-force pair check
  Progress,     ///< |neg.n| + |pos.n| strictly decreases along the trace
  Oracle,       ///< algorithmic and brute-force results agree
  RandomPairs,  ///< pair checks agree on random non-trace pairs
};

std::string_view to_string(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name);
std::vector<Check> all_checks();

struct SweepConfig {
  Integer m_min = 2;
  Integer m_max = 200;
  std::vector<Check> checks = all_checks();
  unsigned workers = 1;
  std::uint64_t seed = 20200101;
  /// Moduli and per-modulus sample size for Check::RandomPairs. These are
  /// independent of [m_min, m_max].
  std::vector<Integer> random_pair_moduli{17, 97, 101};
  std::size_t random_pairs = 1000;
  /// Traces longer than factor * bit_length(M) steps are reported as
  /// anomalies by the progress check, never as failures.
  std::size_t trace_cap_factor = 10;
  oracle::Ceilings ceilings;

  /// Throws RangeError for an invalid range and CeilingExceeded when a
  /// selected check would run past its oracle ceiling.
  void validate() const;
};

struct Counterexample {
  Check check;
  Integer m;
  Integer x;
  /// Trace step index, or sample index for random pairs.
  std::size_t step = 0;
  std::string detail;
  std::vector<FractionPair> trace;
};

/// A trace longer than the configured cap.
struct Anomaly {
  Integer m;
  Integer x;
  std::size_t steps;
  std::size_t cap;
};

struct CheckReport {
  Check check;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::vector<Counterexample> counterexamples;
};

struct VerificationReport {
  std::vector<CheckReport> checks;
  std::vector<Anomaly> anomalies;
  std::chrono::milliseconds duration{0};

  const CheckReport* find(Check c) const;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Runs every selected check over all M in [m_min, m_max] and all x.
/// Work is split by modulus across `workers` threads; the result does not
/// depend on the worker count apart from `duration`.
VerificationReport run_sweep(const SweepConfig& config);

VerificationReport check_determinant(SweepConfig config);
VerificationReport check_sqrt_bound(SweepConfig config);
VerificationReport check_minimality(SweepConfig config);
VerificationReport check_progress(SweepConfig config);

}  // namespace modfrac
