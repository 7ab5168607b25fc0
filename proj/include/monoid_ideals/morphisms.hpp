#ifndef MONOID_IDEALS_MORPHISMS_HPP_
#define MONOID_IDEALS_MORPHISMS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "monoid_ideals/classify.hpp"
#include "monoid_ideals/ideals.hpp"

namespace monoid_ideals {

/// ker(phi) as the pair set { (a,b) | phi(a) = phi(b) }, diagonal included.
struct KernelCongruence {
  const FiniteMonoid* source;
  std::vector<std::pair<int, int>> pairs;

  bool relates(int a, int b) const;
};

/// Inverse image of an ideal of the target.
Ideal contract(const Homomorphism& phi, const Ideal& target_ideal);

/// Ideal generated by the forward image of an ideal of the source.
Ideal extend(const Homomorphism& phi, const Ideal& source_ideal);

/// All kernel pairs; the congruence invariants (equivalence + stability
/// under multiplication) are checked before returning.
KernelCongruence kernel(const Homomorphism& phi);

// The kernel-smallness hypothesis, read with the Rees congruence of the
// principal ideal standing in for the ideal itself: for every x with
// phi(x) != phi(0), each kernel pair is either diagonal or lies inside
// <x> x <x>.
bool kernel_condition_rees(const Homomorphism& phi);

struct InverseImageEntry {
  ElementSet target_ideal;    // an irreducible ideal J of the target
  ElementSet contraction;     // J^c in the source
  bool contraction_irreducible;
};

struct InverseImageReport {
  bool kernel_condition_rees;
  std::vector<InverseImageEntry> entries;
  // Indices of entries whose contraction is reducible. Under the
  // hypothesis this list must be empty; without it the entries are
  // counterexample certificates, not failures.
  std::vector<std::size_t> counterexamples;
  bool implication_holds;
};

/// For a surjective phi, contracts every irreducible ideal of the target
/// and reports irreducibility in the source. Throws NotSurjective.
InverseImageReport check_inverse_image_irreducible(
    const Homomorphism& phi, const IdealLattice& source_lattice,
    const IdealLattice& target_lattice);

/// Backtracking enumeration of all homomorphisms source -> target, in
/// lexicographic map order. Intended for small monoids; the count grows
/// as |target|^|source|.
std::vector<Homomorphism> enumerate_homs(const FiniteMonoid& source,
                                         const FiniteMonoid& target,
                                         bool surjective_only = false);

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_MORPHISMS_HPP_
