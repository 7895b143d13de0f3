#pragma once

#include <cstddef>
#include <optional>

#include "modfrac/descent.hpp"
#include "modfrac/residues.hpp"

namespace modfrac {

/// Outcome of a minimality check. A failed check names the first
/// denominator (and its class) that violates the definition.
struct MinimalityVerdict {
  bool holds = true;
  std::optional<Integer> witness_d;
  std::optional<ResidueClass> witness_class;

  explicit operator bool() const noexcept { return holds; }
};

/// Ordering key for the minimum fraction: smallest max(|n|, d), then the
/// smaller denominator, then the positive class.
struct MinimumKey {
  Integer max_coefficient;
  Integer d;
  ResidueClass cls;

  friend bool operator==(const MinimumKey&, const MinimumKey&) = default;
  friend bool operator<(const MinimumKey& a, const MinimumKey& b);
};

MinimumKey minimum_key(const Fraction& f);

/// True iff f is preferred over g as the minimum fraction.
inline bool precedes(const Fraction& f, const Fraction& g) {
  return minimum_key(f) < minimum_key(g);
}

/// No smaller denominator in f's class gives a numerator of smaller
/// magnitude. O(f.d) residue evaluations.
///
/// Throws ContractError if f is outside its class range or does not
/// represent x.
MinimalityVerdict is_minimal_in_class(const Fraction& f, const Residue& x);

/// Pair minimality: any denominator whose residue in either class has
/// magnitude below |neg.n| + |pos.n| is at least the denominator of the
/// pair's fraction in that class. Negative-class denominators are examined
/// before positive ones when looking for a witness.
MinimalityVerdict is_minimal_pair(const FractionPair& p, const Residue& x);

/// The representation with d >= 1 that is least under MinimumKey.
///
/// Scans the descent and stops once every fraction still to come has a
/// denominator larger than the best key found.
Fraction minimum_fraction(const Residue& x,
                          std::size_t max_steps = kUnlimitedSteps);

/// |n|^2 <= M and d^2 <= M.
bool within_sqrt_bound(const Fraction& f, const Modulus& m);

/// First fraction visited by the descent with both coefficients bounded by
/// sqrt(M). Throws InvariantViolation if the descent has none.
Fraction sqrt_bound_witness(const Residue& x,
                            std::size_t max_steps = kUnlimitedSteps);

}  // namespace modfrac
