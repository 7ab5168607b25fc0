#include "monoid_ideals/classify.hpp"

#include <algorithm>

namespace monoid_ideals {

bool is_proper(const Ideal& ideal) { return !ideal.members().is_full(); }

bool is_prime(const Ideal& ideal) {
  if (!is_proper(ideal)) return false;
  const FiniteMonoid& m = ideal.monoid();
  for (int x = 0; x < m.size(); ++x) {
    if (ideal.contains(x)) continue;
    for (int y = x; y < m.size(); ++y) {
      if (ideal.contains(y)) continue;
      if (ideal.contains(m.mul(x, y))) return false;
    }
  }
  return true;
}

bool is_semiprime(const Ideal& ideal) {
  return radical(ideal).members() == ideal.members();
}

bool is_primary(const Ideal& ideal) {
  if (!is_proper(ideal)) return false;
  const FiniteMonoid& m = ideal.monoid();
  const ElementSet rad = radical(ideal).members();
  for (int x = 0; x < m.size(); ++x) {
    if (ideal.contains(x)) continue;
    for (int y = 0; y < m.size(); ++y) {
      if (rad.contains(y)) continue;
      if (ideal.contains(m.mul(x, y))) return false;
    }
  }
  return true;
}

Ideal maximal_ideal(const FiniteMonoid& m) {
  ElementSet non_units = units(m).complement();
  if (non_units.is_empty()) {
    throw MonoidError(ErrorCode::NoProperIdeal,
                      "every element is invertible (trivial monoid)");
  }
  return Ideal(m, non_units);
}

bool is_maximal(const Ideal& ideal) {
  ElementSet non_units = units(ideal.monoid()).complement();
  return !non_units.is_empty() && ideal.members() == non_units;
}

bool is_irreducible(const Ideal& ideal, const IdealLattice& lattice) {
  const ElementSet& target = ideal.members();
  // Only ideals containing I can intersect to I.
  std::vector<const ElementSet*> over;
  for (const Ideal& j : lattice.ideals()) {
    if (target.subset_of(j.members()) && !(j.members() == target)) {
      over.push_back(&j.members());
    }
  }
  for (std::size_t a = 0; a < over.size(); ++a) {
    for (std::size_t b = a + 1; b < over.size(); ++b) {
      if (over[a]->intersect(*over[b]) == target) return false;
    }
  }
  return true;
}

bool is_strongly_irreducible(const Ideal& ideal, const IdealLattice& lattice) {
  const ElementSet& target = ideal.members();
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    const ElementSet& ja = lattice.at(a).members();
    if (ja.subset_of(target)) continue;
    for (std::size_t b = a; b < lattice.size(); ++b) {
      const ElementSet& jb = lattice.at(b).members();
      if (jb.subset_of(target)) continue;
      if (ja.intersect(jb).subset_of(target)) return false;
    }
  }
  return true;
}

bool elementwise_irreducible(const Ideal& ideal) {
  const FiniteMonoid& m = ideal.monoid();
  std::vector<ElementSet> principals;
  principals.reserve(static_cast<std::size_t>(m.size()));
  for (int a = 0; a < m.size(); ++a) {
    principals.push_back(principal(m, a).members());
  }
  for (int x = 0; x < m.size(); ++x) {
    if (ideal.contains(x)) continue;
    for (int y = x; y < m.size(); ++y) {
      if (ideal.contains(y)) continue;
      if (principals[static_cast<std::size_t>(x)]
              .intersect(principals[static_cast<std::size_t>(y)])
              .subset_of(ideal.members())) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Ideal> minimal_irreducibles_over(const Ideal& ideal,
                                             const IdealLattice& lattice) {
  if (!is_proper(ideal)) {
    throw MonoidError(ErrorCode::NotProper,
                      "minimal irreducible over requires a proper ideal");
  }
  std::vector<Ideal> over;
  for (const Ideal& j : lattice.ideals()) {
    if (ideal.members().subset_of(j.members()) &&
        is_irreducible(j, lattice)) {
      over.push_back(j);
    }
  }
  std::vector<Ideal> minimal;
  for (const Ideal& candidate : over) {
    bool has_smaller = false;
    for (const Ideal& other : over) {
      if (!(other.members() == candidate.members()) &&
          other.members().subset_of(candidate.members())) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(candidate);
  }
  // The lattice is already canonically ordered, so minimal is too.
  return minimal;
}

Ideal minimal_irreducible_over(const Ideal& ideal,
                               const IdealLattice& lattice) {
  return minimal_irreducibles_over(ideal, lattice).front();
}

bool all_ideals_comparable(const IdealLattice& lattice) {
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    for (std::size_t b = a + 1; b < lattice.size(); ++b) {
      const ElementSet& sa = lattice.at(a).members();
      const ElementSet& sb = lattice.at(b).members();
      if (!sa.subset_of(sb) && !sb.subset_of(sa)) return false;
    }
  }
  return true;
}

IdealClassification classify_ideal(const Ideal& ideal,
                                   const IdealLattice& lattice) {
  IdealClassification out;
  out.proper = is_proper(ideal);
  out.prime = is_prime(ideal);
  out.semiprime = is_semiprime(ideal);
  out.primary = is_primary(ideal);
  out.maximal = is_maximal(ideal);
  out.irreducible = is_irreducible(ideal, lattice);
  out.strongly_irreducible = is_strongly_irreducible(ideal, lattice);
  out.radical_members = radical(ideal).members();
  return out;
}

}  // namespace monoid_ideals
