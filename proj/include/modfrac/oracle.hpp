#pragma once

// Brute-force ground truth. Everything here is recomputed from the
// definitions (multiply, reduce, shift) without going through the residue,
// descent or minimality code it is used to check.

#include <vector>

#include "modfrac/residues.hpp"

namespace modfrac::oracle {

/// Largest moduli the exhaustive routines accept.
struct Ceilings {
  Integer enumeration = 1'000'000;
  Integer pair_check = 10'000;

  /// Defaults, with both ceilings replaced by MODFRAC_CEILING when set.
  static Ceilings from_environment();
};

/// Every representation of x, one per denominator in each class.
struct RepresentationTable {
  Residue x;
  std::vector<Fraction> pos;  ///< pos[i] has d = i + 1, for d in 1..M
  std::vector<Fraction> neg;  ///< neg[i] has d = i, for d in 0..M-1
};

/// Throws CeilingExceeded when M > ceilings.enumeration.
std::vector<Fraction> enumerate_class(const Residue& x, ResidueClass c,
                                      const Ceilings& ceilings = {});

RepresentationTable enumerate(const Residue& x, const Ceilings& ceilings = {});

/// Exhaustive minimum over all d >= 1 in both classes.
Fraction brute_minimum(const Residue& x, const Ceilings& ceilings = {});

/// Pair minimality evaluated literally over every d in [0, M].
/// Throws CeilingExceeded when M > ceilings.pair_check.
bool brute_pair_minimal(const FractionPair& p, const Residue& x,
                        const Ceilings& ceilings = {});

}  // namespace modfrac::oracle
