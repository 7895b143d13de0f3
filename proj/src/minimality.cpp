#include "modfrac/minimality.hpp"

#include <string>
#include <tuple>

#include "modfrac/errors.hpp"

namespace modfrac {

namespace {

void require_representation(const Fraction& f, const Residue& x) {
  if (!f.fits(x.modulus())) {
    throw ContractError("fraction " + to_string(f.n()) + "/" +
                        to_string(f.d()) + " is outside its class range");
  }
  if (!represents(x, f)) {
    throw ContractError("fraction " + to_string(f.n()) + "/" +
                        to_string(f.d()) + " does not represent " +
                        to_string(x.value()));
  }
}

// First d in [first, limit) whose class residue has magnitude below bound.
std::optional<Integer> first_smaller(const Residue& x, ResidueClass c,
                                     const Integer& first,
                                     const Integer& limit,
                                     const Integer& bound) {
  for (Integer d = first; d < limit; ++d) {
    if (abs(residue(x, c, d)) < bound) return d;
  }
  return std::nullopt;
}

MinimalityVerdict violated(Integer d, ResidueClass c) {
  return {false, std::move(d), c};
}

Integer class_first_denominator(ResidueClass c) {
  return c == ResidueClass::Positive ? 1 : 0;
}

void check_steps(const Descent& descent, std::size_t max_steps) {
  if (descent.steps() == max_steps) {
    throw CeilingExceeded("descent exceeded " + std::to_string(max_steps) +
                          " steps");
  }
}

}  // namespace

bool operator<(const MinimumKey& a, const MinimumKey& b) {
  return std::tie(a.max_coefficient, a.d, a.cls) <
         std::tie(b.max_coefficient, b.d, b.cls);
}

MinimumKey minimum_key(const Fraction& f) {
  const Integer magnitude = abs(f.n());
  return {magnitude > f.d() ? magnitude : f.d(), f.d(), f.residue_class()};
}

MinimalityVerdict is_minimal_in_class(const Fraction& f, const Residue& x) {
  require_representation(f, x);
  const ResidueClass c = f.residue_class();
  if (auto d = first_smaller(x, c, class_first_denominator(c), f.d(),
                             abs(f.n()))) {
    return violated(std::move(*d), c);
  }
  return {};
}

MinimalityVerdict is_minimal_pair(const FractionPair& p, const Residue& x) {
  require_representation(p.neg, x);
  require_representation(p.pos, x);
  const Integer bound = abs(p.neg.n()) + abs(p.pos.n());
  if (auto d = first_smaller(x, ResidueClass::Negative, 0, p.neg.d(), bound)) {
    return violated(std::move(*d), ResidueClass::Negative);
  }
  if (auto d = first_smaller(x, ResidueClass::Positive, 1, p.pos.d(), bound)) {
    return violated(std::move(*d), ResidueClass::Positive);
  }
  return {};
}

Fraction minimum_fraction(const Residue& x, std::size_t max_steps) {
  Descent descent(x);
  const FractionPair& start = descent.current();
  // The initial negative fraction has d = 0 and never competes.
  Fraction best = start.pos;
  MinimumKey best_key = minimum_key(best);
  for (;;) {
    const FractionPair& p = descent.current();
    // Every later fraction has d >= neg.d + pos.d.
    if (descent.done() || p.neg.d() + p.pos.d() > best_key.max_coefficient) {
      return best;
    }
    check_steps(descent, max_steps);
    descent.advance();
    const Fraction& candidate = descent.last_mediant();
    MinimumKey key = minimum_key(candidate);
    if (key < best_key) {
      best = candidate;
      best_key = std::move(key);
    }
  }
}

bool within_sqrt_bound(const Fraction& f, const Modulus& m) {
  return f.n() * f.n() <= m.value() && f.d() * f.d() <= m.value();
}

Fraction sqrt_bound_witness(const Residue& x, std::size_t max_steps) {
  Descent descent(x);
  const Modulus& m = x.modulus();
  for (const Fraction* f : {&descent.current().neg, &descent.current().pos}) {
    if (within_sqrt_bound(*f, m)) return *f;
  }
  for (;;) {
    const FractionPair& p = descent.current();
    const Integer next_d = p.neg.d() + p.pos.d();
    if (descent.done() || next_d * next_d > m.value()) break;
    check_steps(descent, max_steps);
    descent.advance();
    if (within_sqrt_bound(descent.last_mediant(), m)) {
      return descent.last_mediant();
    }
  }
  throw InvariantViolation("no fraction with |n|, d <= sqrt(M) for x = " +
                           to_string(x.value()) + " mod " +
                           to_string(m.value()));
}

}  // namespace modfrac
