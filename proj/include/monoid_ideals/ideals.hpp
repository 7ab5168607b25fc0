#ifndef MONOID_IDEALS_IDEALS_HPP_
#define MONOID_IDEALS_IDEALS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "monoid_ideals/monoid.hpp"

namespace monoid_ideals {

inline constexpr std::size_t kDefaultMaxIdeals = std::size_t{1} << 20;

/// A nonempty subset closed under multiplication by arbitrary elements.
/// Valid by construction: the constructor rejects anything else.
class Ideal {
 public:
  Ideal(const FiniteMonoid& m, ElementSet members);

  const FiniteMonoid& monoid() const { return *monoid_; }
  const ElementSet& members() const { return members_; }
  bool contains(int a) const { return members_.contains(a); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.members_ == b.members_ && *a.monoid_ == *b.monoid_;
  }

 private:
  const FiniteMonoid* monoid_;
  ElementSet members_;
};

/// Smallest ideal containing S, i.e. S together with SM.
Ideal generate(const FiniteMonoid& m, const ElementSet& generators);

/// Principal ideal of a single element.
Ideal principal(const FiniteMonoid& m, int a);

/// IJ = { ij | i in I, j in J }. Always lands inside the intersection.
Ideal product(const Ideal& lhs, const Ideal& rhs);

Ideal intersect(const Ideal& lhs, const Ideal& rhs);
Ideal unite(const Ideal& lhs, const Ideal& rhs);

/// (I : S) = { m | mS subset of I }.
Ideal colon(const Ideal& ideal, const ElementSet& divisors);

/// { m | m^k in I for some k >= 1 }. The power sequence of an element of
/// a finite monoid repeats within n steps, so exponents up to n suffice.
Ideal radical(const Ideal& ideal);

/// Every ideal of the monoid, in canonical order (cardinality, then the
/// set containing the smallest differing element).
class IdealLattice {
 public:
  IdealLattice(const FiniteMonoid& m, std::vector<Ideal> ideals)
      : monoid_(&m), ideals_(std::move(ideals)) {}

  const FiniteMonoid& monoid() const { return *monoid_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& at(std::size_t i) const { return ideals_[i]; }

  std::optional<std::size_t> index_of(const ElementSet& members) const;
  bool contains_set(const ElementSet& members) const {
    return index_of(members).has_value();
  }

 private:
  const FiniteMonoid* monoid_;
  std::vector<Ideal> ideals_;
};

/// Full enumeration as the union-closure of the principal ideals (every
/// ideal is the union of the principal ideals of its members). Throws
/// LatticeTooLarge past max_ideals.
IdealLattice enumerate_ideals(const FiniteMonoid& m,
                              std::size_t max_ideals = kDefaultMaxIdeals);

struct DistributivityResult {
  bool distributive;
  // Indices into the lattice of a violating (A,B,C), all npos when none.
  std::array<std::size_t, 3> witness;
};

/// A ∩ (B ∪ C) = (A ∩ B) ∪ (A ∩ C) over all ideal triples.
DistributivityResult is_distributive(const IdealLattice& lattice);

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_IDEALS_HPP_
