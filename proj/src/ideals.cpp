#include "monoid_ideals/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monoid_ideals {

Ideal::Ideal(const FiniteMonoid& m, ElementSet members)
    : monoid_(&m), members_(members) {
  if (members.universe() != m.size()) {
    throw MonoidError(ErrorCode::MonoidMismatch,
                      "member set universe " +
                          std::to_string(members.universe()) +
                          " != monoid size " + std::to_string(m.size()));
  }
  if (members.is_empty()) {
    throw MonoidError(ErrorCode::NotAnIdeal, "ideal must be nonempty");
  }
  for (int i = 0; i < m.size(); ++i) {
    if (!members.contains(i)) continue;
    for (int x = 0; x < m.size(); ++x) {
      if (!members.contains(m.mul(i, x))) {
        throw MonoidError(ErrorCode::NotAnIdeal,
                          "not absorbing: " + std::to_string(i) + "*" +
                              std::to_string(x) + " escapes",
                          {i, x, m.mul(i, x)});
      }
    }
  }
}

namespace {

void require_same_monoid(const Ideal& lhs, const Ideal& rhs, ErrorCode code) {
  if (!(lhs.monoid() == rhs.monoid())) {
    throw MonoidError(code, "ideals belong to different monoids");
  }
}

}  // namespace

Ideal generate(const FiniteMonoid& m, const ElementSet& generators) {
  if (generators.is_empty()) {
    throw MonoidError(ErrorCode::EmptyGeneratorSet,
                      "generator set must be nonempty");
  }
  ElementSet out = generators;
  for (int s = 0; s < m.size(); ++s) {
    if (!generators.contains(s)) continue;
    for (int x = 0; x < m.size(); ++x) out.insert(m.mul(s, x));
  }
  return Ideal(m, out);
}

Ideal principal(const FiniteMonoid& m, int a) {
  return generate(m, ElementSet::single(m.size(), a));
}

Ideal product(const Ideal& lhs, const Ideal& rhs) {
  require_same_monoid(lhs, rhs, ErrorCode::MonoidMismatch);
  const FiniteMonoid& m = lhs.monoid();
  ElementSet out = ElementSet::empty(m.size());
  for (int i = 0; i < m.size(); ++i) {
    if (!lhs.contains(i)) continue;
    for (int j = 0; j < m.size(); ++j) {
      if (rhs.contains(j)) out.insert(m.mul(i, j));
    }
  }
  if (!out.subset_of(lhs.members().intersect(rhs.members()))) {
    throw std::logic_error("product escaped the intersection");
  }
  return Ideal(m, out);
}

Ideal intersect(const Ideal& lhs, const Ideal& rhs) {
  require_same_monoid(lhs, rhs, ErrorCode::MonoidMismatch);
  return Ideal(lhs.monoid(), lhs.members().intersect(rhs.members()));
}

Ideal unite(const Ideal& lhs, const Ideal& rhs) {
  require_same_monoid(lhs, rhs, ErrorCode::MonoidMismatch);
  return Ideal(lhs.monoid(), lhs.members().unite(rhs.members()));
}

Ideal colon(const Ideal& ideal, const ElementSet& divisors) {
  if (divisors.is_empty()) {
    throw MonoidError(ErrorCode::EmptyDivisorSet,
                      "divisor set must be nonempty");
  }
  const FiniteMonoid& m = ideal.monoid();
  if (divisors.universe() != m.size()) {
    throw MonoidError(ErrorCode::MonoidMismatch,
                      "divisor set universe does not match the monoid");
  }
  ElementSet out = ElementSet::empty(m.size());
  for (int a = 0; a < m.size(); ++a) {
    bool all_in = true;
    for (int s = 0; s < m.size() && all_in; ++s) {
      if (divisors.contains(s) && !ideal.contains(m.mul(a, s))) all_in = false;
    }
    if (all_in) out.insert(a);
  }
  return Ideal(m, out);
}

Ideal radical(const Ideal& ideal) {
  const FiniteMonoid& m = ideal.monoid();
  ElementSet out = ElementSet::empty(m.size());
  for (int a = 0; a < m.size(); ++a) {
    int p = a;
    for (int k = 1; k <= m.size(); ++k) {
      if (ideal.contains(p)) {
        out.insert(a);
        break;
      }
      p = m.mul(p, a);
    }
  }
  return Ideal(m, out);
}

std::optional<std::size_t> IdealLattice::index_of(
    const ElementSet& members) const {
  auto it = std::lower_bound(ideals_.begin(), ideals_.end(), members,
                             [](const Ideal& lhs, const ElementSet& rhs) {
                               return ElementSet::canonical_less(lhs.members(),
                                                                 rhs);
                             });
  if (it != ideals_.end() && it->members() == members) {
    return static_cast<std::size_t>(it - ideals_.begin());
  }
  return std::nullopt;
}

IdealLattice enumerate_ideals(const FiniteMonoid& m, std::size_t max_ideals) {
  // Union-closure of the principal ideals. std::set keyed by bits gives
  // dedup; the worklist grows only when a genuinely new union appears.
  std::set<std::uint64_t> seen;
  std::vector<ElementSet> found;
  for (int a = 0; a < m.size(); ++a) {
    ElementSet p = principal(m, a).members();
    if (seen.insert(p.bits()).second) found.push_back(p);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet u = found[i].unite(found[j]);
      if (seen.insert(u.bits()).second) {
        found.push_back(u);
        if (found.size() > max_ideals) {
          throw MonoidError(ErrorCode::LatticeTooLarge,
                            "ideal count exceeds cap " +
                                std::to_string(max_ideals));
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), ElementSet::canonical_less);
  std::vector<Ideal> ideals;
  ideals.reserve(found.size());
  for (const ElementSet& s : found) ideals.emplace_back(m, s);
  return IdealLattice(m, std::move(ideals));
}

DistributivityResult is_distributive(const IdealLattice& lattice) {
  const std::size_t npos = static_cast<std::size_t>(-1);
  const std::size_t n = lattice.size();
  for (std::size_t a = 0; a < n; ++a) {
    const ElementSet& sa = lattice.at(a).members();
    for (std::size_t b = 0; b < n; ++b) {
      const ElementSet& sb = lattice.at(b).members();
      for (std::size_t c = 0; c < n; ++c) {
        const ElementSet& sc = lattice.at(c).members();
        ElementSet lhs = sa.intersect(sb.unite(sc));
        ElementSet rhs = sa.intersect(sb).unite(sa.intersect(sc));
        if (!(lhs == rhs)) {
          return {false, {a, b, c}};
        }
      }
    }
  }
  return {true, {npos, npos, npos}};
}

}  // namespace monoid_ideals
