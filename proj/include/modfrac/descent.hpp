#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "modfrac/residues.hpp"

namespace modfrac {

inline constexpr std::size_t kUnlimitedSteps =
    std::numeric_limits<std::size_t>::max();

/// (-M/0, x/1): the negative and positive residues at their smallest
/// admissible denominators.
FractionPair initial_pair(const Residue& x);

/// Replaces the fraction with the larger-magnitude numerator by the mediant
/// of the pair and reports which side was replaced.
///
/// The replaced side is always the one whose class matches the mediant. On a
/// magnitude tie the mediant numerator is zero, so the positive side is
/// replaced and the descent terminates. Throws StateError on a terminal pair.
std::pair<FractionPair, ResidueClass> descend_step(const FractionPair& p,
                                                   const Residue& x);

inline bool is_terminal(const FractionPair& p) { return p.pos.n() == 0; }

/// Incremental form of the descent, for callers that scan the pairs without
/// materializing them.
class Descent {
 public:
  explicit Descent(Residue x);

  const Residue& residue() const noexcept { return x_; }
  const FractionPair& current() const noexcept { return pair_; }
  /// Number of steps taken so far.
  std::size_t steps() const noexcept { return steps_; }
  std::optional<ResidueClass> last_replaced() const noexcept { return last_; }
  /// The fraction introduced by the last step.
  const Fraction& last_mediant() const;
  bool done() const { return is_terminal(pair_); }

  void advance();

 private:
  Residue x_;
  FractionPair pair_;
  std::size_t steps_ = 0;
  std::optional<ResidueClass> last_;
};

struct DescentStep {
  FractionPair pair;
  /// Absent for the initial pair.
  std::optional<ResidueClass> replaced;

  friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

struct DescentTrace {
  Residue x;
  std::vector<DescentStep> steps;

  const FractionPair& final_pair() const { return steps.back().pair; }
};

/// Runs the descent from initial_pair(x) until the positive numerator is
/// zero. Throws CeilingExceeded if more than `max_steps` steps would be
/// needed.
DescentTrace run_descent(const Residue& x,
                         std::size_t max_steps = kUnlimitedSteps);

/// Distinct fractions visited by the descent, in order of first appearance.
std::vector<Fraction> minimal_fractions(const DescentTrace& trace);
std::vector<Fraction> minimal_fractions(
    const Residue& x, std::size_t max_steps = kUnlimitedSteps);

}  // namespace modfrac
