#include "monoid_ideals/localization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "monoid_ideals/classify.hpp"

namespace monoid_ideals {

MultiplicativeSet::MultiplicativeSet(const FiniteMonoid& m, ElementSet members)
    : monoid_(&m), members_(members) {
  if (members.universe() != m.size()) {
    throw MonoidError(ErrorCode::MonoidMismatch,
                      "set universe does not match the monoid");
  }
  if (!members.contains(m.identity())) {
    throw MonoidError(ErrorCode::NotMultiplicativelyClosed,
                      "set does not contain the identity");
  }
  for (int s = 0; s < m.size(); ++s) {
    if (!members.contains(s)) continue;
    for (int t = s; t < m.size(); ++t) {
      if (!members.contains(t)) continue;
      if (!members.contains(m.mul(s, t))) {
        throw MonoidError(ErrorCode::NotMultiplicativelyClosed,
                          "not closed: " + std::to_string(s) + "*" +
                              std::to_string(t) + " escapes",
                          {s, t, m.mul(s, t)});
      }
    }
  }
}

namespace {

// Plain union-find over pair indices.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void merge(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

LocalizedMonoid localize(const FiniteMonoid& m, const MultiplicativeSet& s) {
  if (!(s.monoid() == m)) {
    throw MonoidError(ErrorCode::BaseMismatch,
                      "multiplicative set belongs to a different monoid");
  }
  const int n = m.size();
  const std::vector<int> denoms = s.members().to_vector();
  const int nd = static_cast<int>(denoms.size());

  // Pair (a, denoms[k]) has flat index a*nd + k; pairs ordered
  // lexicographically by (numerator, denominator).
  auto pair_index = [nd](int a, int k) { return a * nd + k; };
  const int npairs = n * nd;

  auto equivalent = [&](int a, int sa, int b, int sb) {
    for (int u : denoms) {
      if (m.mul(m.mul(a, sb), u) == m.mul(m.mul(b, sa), u)) return true;
    }
    return false;
  };

  UnionFind uf(npairs);
  for (int a = 0; a < n; ++a) {
    for (int ka = 0; ka < nd; ++ka) {
      for (int b = a; b < n; ++b) {
        for (int kb = (b == a ? ka + 1 : 0); kb < nd; ++kb) {
          if (uf.find(pair_index(a, ka)) == uf.find(pair_index(b, kb))) {
            continue;
          }
          if (equivalent(a, denoms[static_cast<std::size_t>(ka)], b,
                         denoms[static_cast<std::size_t>(kb)])) {
            uf.merge(pair_index(a, ka), pair_index(b, kb));
          }
        }
      }
    }
  }

  // Number the classes by their least pair, which is also the
  // representative used for the label.
  std::vector<int> class_id(static_cast<std::size_t>(npairs), -1);
  std::vector<std::pair<int, int>> reps;  // (numerator, denominator)
  for (int p = 0; p < npairs; ++p) {
    int root = uf.find(p);
    if (class_id[static_cast<std::size_t>(root)] < 0) {
      class_id[static_cast<std::size_t>(root)] = static_cast<int>(reps.size());
      reps.emplace_back(p / nd, denoms[static_cast<std::size_t>(p % nd)]);
    }
    class_id[static_cast<std::size_t>(p)] = class_id[static_cast<std::size_t>(root)];
  }
  const int nq = static_cast<int>(reps.size());

  auto class_of_pair = [&](int a, int k) {
    return class_id[static_cast<std::size_t>(pair_index(a, k))];
  };

  // Quotient table from representatives, then a sweep over every member
  // pair to confirm the operation is class-independent.
  std::vector<std::vector<int>> qtable(static_cast<std::size_t>(nq),
                                       std::vector<int>(static_cast<std::size_t>(nq)));
  std::vector<int> denom_pos(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < nd; ++k) denom_pos[static_cast<std::size_t>(denoms[static_cast<std::size_t>(k)])] = k;
  auto product_class = [&](int a, int sa, int b, int sb) {
    return class_of_pair(m.mul(a, b), denom_pos[static_cast<std::size_t>(m.mul(sa, sb))]);
  };
  for (int ci = 0; ci < nq; ++ci) {
    for (int cj = 0; cj < nq; ++cj) {
      qtable[static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)] =
          product_class(reps[static_cast<std::size_t>(ci)].first,
                        reps[static_cast<std::size_t>(ci)].second,
                        reps[static_cast<std::size_t>(cj)].first,
                        reps[static_cast<std::size_t>(cj)].second);
    }
  }
  for (int pa = 0; pa < npairs; ++pa) {
    for (int pb = 0; pb < npairs; ++pb) {
      int expect = qtable[static_cast<std::size_t>(class_id[static_cast<std::size_t>(pa)])]
                         [static_cast<std::size_t>(class_id[static_cast<std::size_t>(pb)])];
      int got = product_class(pa / nd, denoms[static_cast<std::size_t>(pa % nd)],
                              pb / nd, denoms[static_cast<std::size_t>(pb % nd)]);
      if (got != expect) {
        throw std::logic_error("localization product is not well-defined");
      }
    }
  }

  std::vector<std::string> qlabels(static_cast<std::size_t>(nq));
  for (int c = 0; c < nq; ++c) {
    qlabels[static_cast<std::size_t>(c)] =
        m.label(reps[static_cast<std::size_t>(c)].first) + "/" +
        m.label(reps[static_cast<std::size_t>(c)].second);
  }
  // Base labels may themselves contain '/'; fall back to class indices if
  // the fraction spellings collide.
  {
    auto sorted = qlabels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      for (int c = 0; c < nq; ++c) {
        qlabels[static_cast<std::size_t>(c)] = "c" + std::to_string(c);
      }
    }
  }
  const int e_pos = denom_pos[static_cast<std::size_t>(m.identity())];
  const int q_identity = class_of_pair(m.identity(), e_pos);
  const int q_zero = class_of_pair(m.zero(), e_pos);
  FiniteMonoid quotient =
      validate_monoid(qtable, q_identity, q_zero, std::move(qlabels));

  std::vector<int> class_table(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < nd; ++k) {
      class_table[static_cast<std::size_t>(a) * n + denoms[static_cast<std::size_t>(k)]] =
          class_of_pair(a, k);
    }
  }
  std::vector<int> to_fraction(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) to_fraction[static_cast<std::size_t>(a)] = class_of_pair(a, e_pos);

  const bool degenerate = s.members().contains(m.zero());
  return LocalizedMonoid(m, s.members(), std::move(quotient),
                         std::move(class_table), std::move(to_fraction),
                         degenerate);
}

int LocalizedMonoid::class_of(int m, int s) const {
  const int n = base_.size();
  if (m < 0 || m >= n || s < 0 || s >= n || !sset_.contains(s)) {
    throw MonoidError(ErrorCode::IndexOutOfRange,
                      "fraction " + std::to_string(m) + "/" +
                          std::to_string(s) + " has no class",
                      {m, s, -1});
  }
  return class_table_[static_cast<std::size_t>(m) * n + s];
}

Ideal extend_to_local(const LocalizedMonoid& loc, const Ideal& base_ideal) {
  if (!(base_ideal.monoid() == loc.base())) {
    throw MonoidError(ErrorCode::BaseMismatch,
                      "ideal does not live in the base monoid");
  }
  ElementSet image = ElementSet::empty(loc.quotient().size());
  for (int a = 0; a < loc.base().size(); ++a) {
    if (base_ideal.contains(a)) image.insert(loc.to_fraction(a));
  }
  return generate(loc.quotient(), image);
}

Ideal contract_from_local(const LocalizedMonoid& loc,
                          const Ideal& quotient_ideal) {
  if (!(quotient_ideal.monoid() == loc.quotient())) {
    throw MonoidError(ErrorCode::QuotientMismatch,
                      "ideal does not live in the quotient monoid");
  }
  ElementSet out = ElementSet::empty(loc.base().size());
  for (int a = 0; a < loc.base().size(); ++a) {
    if (quotient_ideal.contains(loc.to_fraction(a))) out.insert(a);
  }
  return Ideal(loc.base(), out);
}

namespace {

void require_zero_free(const LocalizedMonoid& loc) {
  if (loc.sset().contains(loc.base().zero())) {
    throw MonoidError(ErrorCode::ZeroInS,
                      "correspondence checks require 0 outside S");
  }
}

}  // namespace

IdealCorrespondenceReport check_ideal_correspondence(
    const LocalizedMonoid& loc) {
  require_zero_free(loc);
  IdealCorrespondenceReport report;
  IdealLattice quotient_lattice = enumerate_ideals(loc.quotient());
  IdealLattice base_lattice = enumerate_ideals(loc.base());

  for (const Ideal& j : quotient_lattice.ideals()) {
    if (is_proper(j)) report.proper_quotient_ideals.push_back(j.members());
  }

  const ElementSet avoid = loc.sset().members().complement();
  for (const Ideal& i : base_lattice.ideals()) {
    if (!i.members().subset_of(avoid)) continue;
    Ideal ext = extend_to_local(loc, i);
    Ideal back = contract_from_local(loc, ext);
    report.base_side.push_back({i.members(), ext.members(), back.members(),
                                back.members() == i.members()});
  }

  // Contraction-closed entries must match the proper quotient ideals 1-1
  // via extension/contraction; every entry's extension must be proper.
  bool ok = true;
  std::vector<ElementSet> contractions;
  for (std::size_t qi = 0; qi < report.proper_quotient_ideals.size(); ++qi) {
    Ideal j(loc.quotient(), report.proper_quotient_ideals[qi]);
    Ideal jc = contract_from_local(loc, j);
    bool matched = false;
    for (std::size_t bi = 0; bi < report.base_side.size(); ++bi) {
      if (report.base_side[bi].base_ideal == jc.members()) {
        if (!report.base_side[bi].contraction_closed ||
            !(report.base_side[bi].extension == j.members())) {
          ok = false;
        }
        report.matching.push_back(bi);
        matched = true;
        break;
      }
    }
    if (!matched) ok = false;
    for (const ElementSet& seen : contractions) {
      if (seen == jc.members()) ok = false;  // contraction not injective
    }
    contractions.push_back(jc.members());
  }
  for (const CorrespondenceEntry& entry : report.base_side) {
    Ideal ext(loc.quotient(), entry.extension);
    if (!is_proper(ext)) ok = false;
    if (entry.contraction_closed) {
      bool hit = false;
      for (const ElementSet& c : contractions) {
        if (c == entry.base_ideal) hit = true;
      }
      if (!hit) ok = false;  // a saturated ideal missed by contraction
    }
  }
  report.bijection_ok = ok;
  return report;
}

IrreducibleCorrespondenceReport check_irreducible_correspondence(
    const LocalizedMonoid& loc) {
  require_zero_free(loc);
  IrreducibleCorrespondenceReport report;
  IdealLattice quotient_lattice = enumerate_ideals(loc.quotient());
  IdealLattice base_lattice = enumerate_ideals(loc.base());

  for (const Ideal& j : quotient_lattice.ideals()) {
    if (is_proper(j) && is_strongly_irreducible(j, quotient_lattice)) {
      report.strongly_irreducible_proper.push_back(j.members());
    }
  }
  for (const Ideal& i : base_lattice.ideals()) {
    if (i.members().intersects(loc.sset().members())) continue;
    if (!is_irreducible(i, base_lattice)) continue;
    Ideal back = contract_from_local(loc, extend_to_local(loc, i));
    if (back.members() == i.members()) {
      report.irreducible_avoiding.push_back(i.members());
    }
  }

  bool a_to_b = true, b_to_a = true, round = true;
  for (const ElementSet& a : report.strongly_irreducible_proper) {
    Ideal j(loc.quotient(), a);
    Ideal jc = contract_from_local(loc, j);
    bool in_b = false;
    for (const ElementSet& b : report.irreducible_avoiding) {
      if (b == jc.members()) in_b = true;
    }
    if (!in_b) a_to_b = false;
    if (!(extend_to_local(loc, jc).members() == a)) round = false;
  }
  for (const ElementSet& b : report.irreducible_avoiding) {
    Ideal i(loc.base(), b);
    Ideal ext = extend_to_local(loc, i);
    if (!is_proper(ext) ||
        !is_strongly_irreducible(ext, quotient_lattice)) {
      b_to_a = false;
    }
    if (!(contract_from_local(loc, ext).members() == b)) round = false;
  }
  report.contraction_lands_in_side_b = a_to_b;
  report.extension_lands_in_side_a = b_to_a;
  report.round_trips_identity = round;
  report.bijection_ok = a_to_b && b_to_a && round &&
                        report.strongly_irreducible_proper.size() ==
                            report.irreducible_avoiding.size();
  return report;
}

std::vector<PrimaryLocalEquivalenceEntry> check_primary_local_equivalence(
    const std::vector<NamedMonoid>& corpus) {
  std::vector<PrimaryLocalEquivalenceEntry> out;
  for (const NamedMonoid& entry : corpus) {
    const FiniteMonoid& m = entry.monoid;
    IdealLattice lattice = enumerate_ideals(m);

    auto all_primary_irreducible = [](const FiniteMonoid& monoid,
                                      const IdealLattice& lat) {
      for (const Ideal& i : lat.ideals()) {
        if (is_primary(i) && !is_irreducible(i, lat)) return false;
      }
      (void)monoid;
      return true;
    };

    PrimaryLocalEquivalenceEntry result;
    result.monoid = entry.name;
    result.primary_irreducible_global = all_primary_irreducible(m, lattice);

    ElementSet u = units(m);
    if (u.is_full()) {
      // Trivial monoid: no maximal ideal, no primes; all three statements
      // hold vacuously.
      result.primary_irreducible_at_maximal = true;
      result.primary_irreducible_at_primes = true;
    } else {
      MultiplicativeSet at_max(m, u);
      LocalizedMonoid loc = localize(m, at_max);
      IdealLattice qlat = enumerate_ideals(loc.quotient());
      result.primary_irreducible_at_maximal =
          all_primary_irreducible(loc.quotient(), qlat);

      bool at_primes = true;
      for (const Ideal& p : lattice.ideals()) {
        if (!is_prime(p)) continue;
        MultiplicativeSet s(m, p.members().complement());
        LocalizedMonoid locp = localize(m, s);
        IdealLattice plat = enumerate_ideals(locp.quotient());
        if (!all_primary_irreducible(locp.quotient(), plat)) {
          at_primes = false;
          break;
        }
      }
      result.primary_irreducible_at_primes = at_primes;
    }
    result.equivalent = (result.primary_irreducible_at_maximal ==
                         result.primary_irreducible_global) &&
                        (result.primary_irreducible_global ==
                         result.primary_irreducible_at_primes);
    out.push_back(result);
  }
  return out;
}

std::vector<ElementSet> enumerate_mult_closed_sets(const FiniteMonoid& m,
                                                   bool exclude_zero) {
  std::vector<ElementSet> out;
  const int n = m.size();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    ElementSet s = ElementSet::from_bits(n, bits);
    if (!s.contains(m.identity())) continue;
    if (exclude_zero && s.contains(m.zero())) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!s.contains(a)) continue;
      for (int b = a; b < n && closed; ++b) {
        if (s.contains(b) && !s.contains(m.mul(a, b))) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

}  // namespace monoid_ideals
