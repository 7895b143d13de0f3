#include "modfrac/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "modfrac/descent.hpp"
#include "modfrac/errors.hpp"
#include "modfrac/minimality.hpp"

namespace modfrac {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 6> kCheckNames{{
    {Check::Determinant, "determinant"},
    {Check::SqrtBound, "sqrt-bound"},
    {Check::Minimality, "minimality"},
    {Check::Progress, "progress"},
    {Check::Oracle, "oracle"},
    {Check::RandomPairs, "random-pairs"},
}};

bool selected(const std::vector<Check>& checks, Check c) {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

bool needs_pair_oracle(Check c) {
  return c == Check::Minimality || c == Check::Oracle ||
         c == Check::RandomPairs;
}

std::vector<FractionPair> pairs_of(const DescentTrace& trace) {
  std::vector<FractionPair> out;
  out.reserve(trace.steps.size());
  for (const auto& s : trace.steps) out.push_back(s.pair);
  return out;
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  os << std::boolalpha;
  (os << ... << parts);
  return os.str();
}

// Accumulates results for one unit of work (one modulus, or one random-pair
// modulus) in the order checks were requested.
class Partial {
 public:
  explicit Partial(const std::vector<Check>& checks) {
    for (Check c : checks) reports_.push_back({c, 0, 0, {}});
  }

  CheckReport& operator[](Check c) {
    return *std::find_if(reports_.begin(), reports_.end(),
                         [c](const CheckReport& r) { return r.check == c; });
  }

  template <typename Detail, typename Trace>
  void record(Check c, bool ok, const Integer& m, const Integer& x,
              std::size_t step, Detail&& detail, Trace&& trace) {
    CheckReport& r = (*this)[c];
    if (ok) {
      ++r.pass;
      return;
    }
    ++r.fail;
    r.counterexamples.push_back({c, m, x, step, detail(), trace()});
  }

  std::vector<CheckReport> reports_;
  std::vector<Anomaly> anomalies_;
};

void sweep_residue(const SweepConfig& cfg, const Residue& x, Partial& out) {
  const auto& checks = cfg.checks;
  const Integer& m = x.m();

  if (selected(checks, Check::SqrtBound)) {
    std::string failure;
    try {
      sqrt_bound_witness(x);
    } catch (const InvariantViolation& e) {
      failure = describe(e.what(), "; gcd(x, M) = ", gcd(x.value(), m));
    }
    out.record(
        Check::SqrtBound, failure.empty(), m, x.value(), 0,
        [&] { return failure; }, [&] { return pairs_of(run_descent(x)); });
  }

  const bool wants_trace =
      selected(checks, Check::Determinant) || selected(checks, Check::Progress) ||
      selected(checks, Check::Minimality) || selected(checks, Check::Oracle);
  if (!wants_trace) return;

  const DescentTrace trace = run_descent(x);
  auto full_trace = [&] { return pairs_of(trace); };

  if (selected(checks, Check::Determinant)) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const Integer det = determinant(trace.steps[i].pair);
      out.record(
          Check::Determinant, det == m, m, x.value(), i,
          [&] { return describe("determinant ", det, " at ", trace.steps[i].pair); },
          full_trace);
    }
  }

  if (selected(checks, Check::Progress)) {
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
      const FractionPair& before = trace.steps[i - 1].pair;
      const FractionPair& after = trace.steps[i].pair;
      const Integer sum_before = abs(before.neg.n()) + abs(before.pos.n());
      const Integer sum_after = abs(after.neg.n()) + abs(after.pos.n());
      const Integer larger = std::max(abs(before.neg.n()), abs(before.pos.n()));
      const Fraction& replaced = *trace.steps[i].replaced == ResidueClass::Negative
                                     ? after.neg
                                     : after.pos;
      const bool ok = sum_after < sum_before && abs(replaced.n()) < larger;
      out.record(
          Check::Progress, ok, m, x.value(), i,
          [&] {
            return describe("sum ", sum_before, " -> ", sum_after,
                            ", replaced numerator ", replaced.n(),
                            " vs larger magnitude ", larger);
          },
          full_trace);
    }
    const std::size_t steps = trace.steps.size() - 1;
    const std::size_t cap = cfg.trace_cap_factor * bit_length(m);
    if (steps > cap) out.anomalies_.push_back({m, x.value(), steps, cap});
  }

  if (selected(checks, Check::Minimality)) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const FractionPair& p = trace.steps[i].pair;
      out.record(
          Check::Minimality, oracle::brute_pair_minimal(p, x, cfg.ceilings),
          m, x.value(), i, [&] { return describe("pair ", p, " not minimal"); },
          full_trace);
    }
  }

  if (selected(checks, Check::Oracle)) {
    const Fraction fast = minimum_fraction(x);
    const Fraction brute = oracle::brute_minimum(x, cfg.ceilings);
    out.record(
        Check::Oracle, fast == brute, m, x.value(), 0,
        [&] { return describe("minimum_fraction ", fast, " vs brute ", brute); },
        full_trace);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const FractionPair& p = trace.steps[i].pair;
      const bool fast_pair = is_minimal_pair(p, x).holds;
      const bool brute_pair = oracle::brute_pair_minimal(p, x, cfg.ceilings);
      out.record(
          Check::Oracle, fast_pair == brute_pair, m, x.value(), i,
          [&] {
            return describe("pair ", p, ": is_minimal_pair ", fast_pair,
                            " vs brute ", brute_pair);
          },
          full_trace);
    }
  }
}

void sweep_modulus(const SweepConfig& cfg, const Integer& m, Partial& out) {
  const Modulus modulus(m);
  for (Integer x = 0; x < m; ++x) sweep_residue(cfg, Residue(x, modulus), out);
}

void sweep_random_pairs(const SweepConfig& cfg, const Integer& m,
                        Partial& out) {
  const Modulus modulus(m);
  std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(m));
  // Draws with a fixed-width integer; the ceiling keeps M small.
  const auto mm = static_cast<std::uint64_t>(m);
  std::uniform_int_distribution<std::uint64_t> pick_x(0, mm - 1);
  std::uniform_int_distribution<std::uint64_t> pick_neg_d(0, mm - 1);
  std::uniform_int_distribution<std::uint64_t> pick_pos_d(1, mm);
  for (std::size_t i = 0; i < cfg.random_pairs; ++i) {
    const Residue x(Integer(pick_x(rng)), modulus);
    Integer dn = pick_neg_d(rng);
    Integer dp = pick_pos_d(rng);
    if (i % 2 == 1) {
      // Odd samples recombine fractions the descent visits at different
      // steps, so that minimal pairs show up alongside arbitrary ones.
      std::vector<Integer> neg_ds, pos_ds;
      for (const Fraction& f : minimal_fractions(x)) {
        (f.n() < 0 ? neg_ds : pos_ds).push_back(f.d());
      }
      dn = neg_ds[std::uniform_int_distribution<std::size_t>(0, neg_ds.size() - 1)(rng)];
      dp = pos_ds[std::uniform_int_distribution<std::size_t>(0, pos_ds.size() - 1)(rng)];
    }
    const FractionPair p(Fraction(neg_residue(x, dn), dn),
                         Fraction(pos_residue(x, dp), dp));
    const bool fast = is_minimal_pair(p, x).holds;
    const bool brute = oracle::brute_pair_minimal(p, x, cfg.ceilings);
    out.record(
        Check::RandomPairs, fast == brute, m, x.value(), i,
        [&] {
          return describe("pair ", p, ": is_minimal_pair ", fast, " vs brute ",
                          brute);
        },
        [&] { return std::vector<FractionPair>{p}; });
  }
}

}  // namespace

std::string_view to_string(Check c) noexcept {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& [check, n] : kCheckNames) {
    if (n == name) return check;
  }
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& entry : kCheckNames) out.push_back(entry.first);
  return out;
}

void SweepConfig::validate() const {
  if (m_min < 2 || m_max < m_min) {
    throw RangeError("invalid modulus range [" + to_string(m_min) + ", " +
                     to_string(m_max) + "]");
  }
  if (workers == 0) throw RangeError("need at least one worker");
  for (Check c : checks) {
    if (c == Check::RandomPairs) {
      for (const Integer& m : random_pair_moduli) {
        if (m < 2) throw RangeError("random-pair modulus below 2");
        if (m > ceilings.pair_check) {
          throw CeilingExceeded("random-pair modulus " + to_string(m) +
                                " exceeds pair-check ceiling " +
                                to_string(ceilings.pair_check));
        }
      }
      continue;
    }
    const Integer& ceiling =
        needs_pair_oracle(c) ? ceilings.pair_check : ceilings.enumeration;
    if (m_max > ceiling) {
      throw CeilingExceeded("check '" + std::string(to_string(c)) +
                            "' refused: m_max " + to_string(m_max) +
                            " exceeds ceiling " + to_string(ceiling));
    }
  }
}

const CheckReport* VerificationReport::find(Check c) const {
  for (const auto& r : checks) {
    if (r.check == c) return &r;
  }
  return nullptr;
}

std::size_t VerificationReport::failures() const {
  std::size_t total = 0;
  for (const auto& r : checks) total += r.fail;
  return total;
}

VerificationReport run_sweep(const SweepConfig& requested) {
  requested.validate();
  SweepConfig config = requested;
  config.checks.clear();
  for (Check c : requested.checks) {
    if (!selected(config.checks, c)) config.checks.push_back(c);
  }
  const auto started = std::chrono::steady_clock::now();

  // One work item per modulus in range, then one per random-pair modulus.
  struct Item {
    Integer m;
    bool random_pairs;
  };
  std::vector<Item> items;
  std::vector<Check> range_checks;
  for (Check c : config.checks) {
    if (c != Check::RandomPairs && !selected(range_checks, c)) {
      range_checks.push_back(c);
    }
  }
  if (!range_checks.empty()) {
    for (Integer m = config.m_min; m <= config.m_max; ++m) {
      items.push_back({m, false});
    }
  }
  if (selected(config.checks, Check::RandomPairs)) {
    for (const Integer& m : config.random_pair_moduli) items.push_back({m, true});
  }

  std::vector<Partial> partials(items.size(), Partial(config.checks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      if (items[i].random_pairs) {
        sweep_random_pairs(config, items[i].m, partials[i]);
      } else {
        SweepConfig narrowed = config;
        narrowed.checks = range_checks;
        sweep_modulus(narrowed, items[i].m, partials[i]);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, config.workers);
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  VerificationReport report;
  report.checks = Partial(config.checks).reports_;
  for (auto& part : partials) {
    for (auto& r : part.reports_) {
      CheckReport& into = *std::find_if(
          report.checks.begin(), report.checks.end(),
          [&](const CheckReport& c) { return c.check == r.check; });
      into.pass += r.pass;
      into.fail += r.fail;
      std::move(r.counterexamples.begin(), r.counterexamples.end(),
                std::back_inserter(into.counterexamples));
    }
    std::move(part.anomalies_.begin(), part.anomalies_.end(),
              std::back_inserter(report.anomalies));
  }
  for (auto& r : report.checks) {
    std::stable_sort(r.counterexamples.begin(), r.counterexamples.end(),
                     [](const Counterexample& a, const Counterexample& b) {
                       return std::tie(a.m, a.x, a.step) <
                              std::tie(b.m, b.x, b.step);
                     });
  }
  std::stable_sort(report.anomalies.begin(), report.anomalies.end(),
                   [](const Anomaly& a, const Anomaly& b) {
                     return std::tie(a.m, a.x) < std::tie(b.m, b.x);
                   });
  report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

namespace {
VerificationReport single(SweepConfig config, Check c) {
  config.checks = {c};
  return run_sweep(config);
}
}  // namespace

VerificationReport check_determinant(SweepConfig config) {
  return single(std::move(config), Check::Determinant);
}
VerificationReport check_sqrt_bound(SweepConfig config) {
  return single(std::move(config), Check::SqrtBound);
}
VerificationReport check_minimality(SweepConfig config) {
  return single(std::move(config), Check::Minimality);
}
VerificationReport check_progress(SweepConfig config) {
  return single(std::move(config), Check::Progress);
}

}  // namespace modfrac
