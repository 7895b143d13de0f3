#include "modfrac/descent.hpp"

#include <set>
#include <string>

#include "modfrac/errors.hpp"

namespace modfrac {

FractionPair initial_pair(const Residue& x) {
  return FractionPair(Fraction(neg_residue(x, 0), 0),
                      Fraction(pos_residue(x, 1), 1));
}

std::pair<FractionPair, ResidueClass> descend_step(const FractionPair& p,
                                                   const Residue& x) {
  if (is_terminal(p)) {
    throw StateError("descent step on a terminal pair");
  }
  Fraction m = mediant(p.neg, p.pos);
  if (!m.fits(x.modulus())) {
    throw InvariantViolation("mediant left its class range");
  }
  if (m.residue_class() == ResidueClass::Negative) {
    return {FractionPair(std::move(m), p.pos), ResidueClass::Negative};
  }
  return {FractionPair(p.neg, std::move(m)), ResidueClass::Positive};
}

Descent::Descent(Residue x) : x_(std::move(x)), pair_(initial_pair(x_)) {}

const Fraction& Descent::last_mediant() const {
  if (!last_) throw StateError("no step taken yet");
  return *last_ == ResidueClass::Negative ? pair_.neg : pair_.pos;
}

void Descent::advance() {
  auto [next, side] = descend_step(pair_, x_);
  pair_ = std::move(next);
  last_ = side;
  ++steps_;
}

DescentTrace run_descent(const Residue& x, std::size_t max_steps) {
  DescentTrace trace{x, {}};
  Descent descent(x);
  trace.steps.push_back({descent.current(), std::nullopt});
  while (!descent.done()) {
    if (descent.steps() == max_steps) {
      throw CeilingExceeded("descent exceeded " + std::to_string(max_steps) +
                            " steps");
    }
    descent.advance();
    trace.steps.push_back({descent.current(), descent.last_replaced()});
  }
  return trace;
}

std::vector<Fraction> minimal_fractions(const DescentTrace& trace) {
  std::vector<Fraction> out;
  std::set<std::pair<Integer, Integer>> seen;
  auto add = [&](const Fraction& f) {
    if (seen.emplace(f.n(), f.d()).second) out.push_back(f);
  };
  for (const auto& step : trace.steps) {
    add(step.pair.neg);
    add(step.pair.pos);
  }
  return out;
}

std::vector<Fraction> minimal_fractions(const Residue& x,
                                        std::size_t max_steps) {
  return minimal_fractions(run_descent(x, max_steps));
}

}  // namespace modfrac
