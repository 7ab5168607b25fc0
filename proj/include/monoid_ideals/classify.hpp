#ifndef MONOID_IDEALS_CLASSIFY_HPP_
#define MONOID_IDEALS_CLASSIFY_HPP_

#include <vector>

#include "monoid_ideals/ideals.hpp"

namespace monoid_ideals {

bool is_proper(const Ideal& ideal);

/// Proper and xy in P implies x in P or y in P.
bool is_prime(const Ideal& ideal);

/// radical(I) = I.
bool is_semiprime(const Ideal& ideal);

/// Proper and xy in I implies x in I or y in radical(I).
bool is_primary(const Ideal& ideal);

/// The set of non-invertible elements — the unique maximal ideal. Throws
/// NoProperIdeal for the trivial monoid, where every element is a unit.
Ideal maximal_ideal(const FiniteMonoid& m);

bool is_maximal(const Ideal& ideal);

/// No two ideals other than I itself intersect to I. The whole monoid
/// counts as irreducible.
bool is_irreducible(const Ideal& ideal, const IdealLattice& lattice);

/// J ∩ K inside I forces J inside I or K inside I.
bool is_strongly_irreducible(const Ideal& ideal, const IdealLattice& lattice);

/// The principal-ideal criterion: <m> ∩ <m'> inside I forces m in I or
/// m' in I. Quadratic in n; needs no enumerated lattice.
bool elementwise_irreducible(const Ideal& ideal);

/// All irreducible ideals containing J that are minimal with respect to
/// inclusion among those, in canonical order. J must be proper.
std::vector<Ideal> minimal_irreducibles_over(const Ideal& ideal,
                                             const IdealLattice& lattice);

/// Canonically first of minimal_irreducibles_over.
Ideal minimal_irreducible_over(const Ideal& ideal,
                               const IdealLattice& lattice);

/// True iff the lattice is a chain under inclusion.
bool all_ideals_comparable(const IdealLattice& lattice);

struct IdealClassification {
  bool proper;
  bool prime;
  bool semiprime;
  bool primary;
  bool maximal;
  bool irreducible;
  bool strongly_irreducible;
  ElementSet radical_members;
};

IdealClassification classify_ideal(const Ideal& ideal,
                                   const IdealLattice& lattice);

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_CLASSIFY_HPP_
