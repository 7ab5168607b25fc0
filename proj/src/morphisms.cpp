#include "monoid_ideals/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoid_ideals {

bool KernelCongruence::relates(int a, int b) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) !=
         pairs.end();
}

Ideal contract(const Homomorphism& phi, const Ideal& target_ideal) {
  if (!(target_ideal.monoid() == *phi.target)) {
    throw MonoidError(ErrorCode::TargetMismatch,
                      "ideal does not live in the homomorphism target");
  }
  const FiniteMonoid& src = *phi.source;
  ElementSet out = ElementSet::empty(src.size());
  for (int a = 0; a < src.size(); ++a) {
    if (target_ideal.contains(phi.apply(a))) out.insert(a);
  }
  return Ideal(src, out);
}

Ideal extend(const Homomorphism& phi, const Ideal& source_ideal) {
  if (!(source_ideal.monoid() == *phi.source)) {
    throw MonoidError(ErrorCode::SourceMismatch,
                      "ideal does not live in the homomorphism source");
  }
  ElementSet image = ElementSet::empty(phi.target->size());
  for (int a = 0; a < phi.source->size(); ++a) {
    if (source_ideal.contains(a)) image.insert(phi.apply(a));
  }
  return generate(*phi.target, image);
}

KernelCongruence kernel(const Homomorphism& phi) {
  const FiniteMonoid& src = *phi.source;
  const int n = src.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (phi.apply(a) == phi.apply(b)) pairs.emplace_back(a, b);
    }
  }
  // Equivalence is immediate from "equal images"; stability deserves the
  // explicit check the type promises.
  for (const auto& [a, b] : pairs) {
    for (int x = 0; x < n; ++x) {
      if (phi.apply(src.mul(a, x)) != phi.apply(src.mul(b, x))) {
        throw std::logic_error("kernel congruence not stable");
      }
    }
  }
  return KernelCongruence{&src, std::move(pairs)};
}

bool kernel_condition_rees(const Homomorphism& phi) {
  const FiniteMonoid& src = *phi.source;
  const int n = src.size();
  const int zero_image = phi.apply(src.zero());
  for (int x = 0; x < n; ++x) {
    if (phi.apply(x) == zero_image) continue;
    const ElementSet px = principal(src, x).members();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (phi.apply(a) != phi.apply(b)) continue;
        if (!(px.contains(a) && px.contains(b))) return false;
      }
    }
  }
  return true;
}

InverseImageReport check_inverse_image_irreducible(
    const Homomorphism& phi, const IdealLattice& source_lattice,
    const IdealLattice& target_lattice) {
  if (!(source_lattice.monoid() == *phi.source) ||
      !(target_lattice.monoid() == *phi.target)) {
    throw MonoidError(ErrorCode::MonoidMismatch,
                      "lattices do not match the homomorphism");
  }
  if (!is_surjective(phi)) {
    throw MonoidError(ErrorCode::NotSurjective,
                      "inverse-image check requires a surjective map");
  }
  InverseImageReport report;
  report.kernel_condition_rees = kernel_condition_rees(phi);
  for (const Ideal& j : target_lattice.ideals()) {
    if (!is_irreducible(j, target_lattice)) continue;
    Ideal jc = contract(phi, j);
    InverseImageEntry entry{j.members(), jc.members(),
                            is_irreducible(jc, source_lattice)};
    if (!entry.contraction_irreducible) {
      report.counterexamples.push_back(report.entries.size());
    }
    report.entries.push_back(entry);
  }
  report.implication_holds =
      !report.kernel_condition_rees || report.counterexamples.empty();
  return report;
}

std::vector<Homomorphism> enumerate_homs(const FiniteMonoid& source,
                                         const FiniteMonoid& target,
                                         bool surjective_only) {
  const int n = source.size();
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  map[static_cast<std::size_t>(source.identity())] = target.identity();
  std::vector<Homomorphism> out;

  // Assign images in element order, pruning as soon as any fully-assigned
  // triple a*b = c disagrees. The new element can appear as an operand or
  // as the product, so both roles get checked.
  auto consistent = [&](int just) {
    for (int b = 0; b < n; ++b) {
      if (map[static_cast<std::size_t>(b)] < 0) continue;
      int ab = source.mul(just, b);
      if (map[static_cast<std::size_t>(ab)] >= 0 &&
          target.mul(map[static_cast<std::size_t>(just)],
                     map[static_cast<std::size_t>(b)]) !=
              map[static_cast<std::size_t>(ab)]) {
        return false;
      }
    }
    for (int x = 0; x < n; ++x) {
      if (map[static_cast<std::size_t>(x)] < 0) continue;
      for (int y = x; y < n; ++y) {
        if (map[static_cast<std::size_t>(y)] < 0) continue;
        if (source.mul(x, y) == just &&
            target.mul(map[static_cast<std::size_t>(x)],
                       map[static_cast<std::size_t>(y)]) !=
                map[static_cast<std::size_t>(just)]) {
          return false;
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int a) -> void {
    while (a < n && map[static_cast<std::size_t>(a)] >= 0) ++a;
    if (a == n) {
      Homomorphism phi{&source, &target, map};
      if (!surjective_only || is_surjective(phi)) out.push_back(phi);
      return;
    }
    for (int v = 0; v < target.size(); ++v) {
      map[static_cast<std::size_t>(a)] = v;
      if (consistent(a)) self(self, a + 1);
      map[static_cast<std::size_t>(a)] = -1;
    }
  };
  if (consistent(source.identity())) rec(rec, 0);
  return out;
}

}  // namespace monoid_ideals
