#ifndef MONOID_IDEALS_LOCALIZATION_HPP_
#define MONOID_IDEALS_LOCALIZATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "monoid_ideals/corpus.hpp"
#include "monoid_ideals/ideals.hpp"

namespace monoid_ideals {

/// A subset containing the identity and closed under the operation.
class MultiplicativeSet {
 public:
  MultiplicativeSet(const FiniteMonoid& m, ElementSet members);

  const FiniteMonoid& monoid() const { return *monoid_; }
  const ElementSet& members() const { return members_; }
  bool contains(int a) const { return members_.contains(a); }

 private:
  const FiniteMonoid* monoid_;
  ElementSet members_;
};

/// The finite quotient of fractions m/s, s in S, with
/// m/s = m'/s' iff (ms')u = (m's)u for some u in S. Owns copies of the
/// base monoid and the quotient table; ideals of the quotient reference
/// this object's quotient member.
class LocalizedMonoid {
 public:
  const FiniteMonoid& base() const { return base_; }
  const ElementSet& sset() const { return sset_; }
  const FiniteMonoid& quotient() const { return quotient_; }

  /// Class index of the fraction m/s. s must belong to S.
  int class_of(int m, int s) const;

  /// Class of m/1.
  int to_fraction(int m) const { return to_fraction_[static_cast<std::size_t>(m)]; }

  /// True when 0 lies in S and the quotient collapsed to a point.
  bool degenerate() const { return degenerate_; }

 private:
  friend LocalizedMonoid localize(const FiniteMonoid&,
                                  const MultiplicativeSet&);
  LocalizedMonoid(FiniteMonoid base, ElementSet sset, FiniteMonoid quotient,
                  std::vector<int> class_table, std::vector<int> to_fraction,
                  bool degenerate)
      : base_(std::move(base)),
        sset_(sset),
        quotient_(std::move(quotient)),
        class_table_(std::move(class_table)),
        to_fraction_(std::move(to_fraction)),
        degenerate_(degenerate) {}

  FiniteMonoid base_;
  ElementSet sset_;
  FiniteMonoid quotient_;
  std::vector<int> class_table_;  // n*n, -1 where the denominator is not in S
  std::vector<int> to_fraction_;
  bool degenerate_;
};

/// Builds M_S by equivalence closure over all pairs in M x S; the induced
/// table is revalidated as a monoid. Class representatives are the
/// lexicographically least (m,s) pairs.
LocalizedMonoid localize(const FiniteMonoid& m, const MultiplicativeSet& s);

/// Ideal of M_S generated by { i/1 | i in I }.
Ideal extend_to_local(const LocalizedMonoid& loc, const Ideal& base_ideal);

/// { m | m/1 in J }.
Ideal contract_from_local(const LocalizedMonoid& loc,
                          const Ideal& quotient_ideal);

struct CorrespondenceEntry {
  ElementSet base_ideal;       // an ideal of M inside M \ S
  ElementSet extension;        // its extension in M_S
  ElementSet contraction;      // contraction of the extension back in M
  bool contraction_closed;     // contraction == base_ideal
};

/// For 0 not in S: contraction must biject the proper ideals of M_S onto
/// the contraction-closed ideals of M inside M \ S, and extension must map
/// every ideal inside M \ S onto a proper ideal of M_S.
struct IdealCorrespondenceReport {
  std::vector<ElementSet> proper_quotient_ideals;      // side A
  std::vector<CorrespondenceEntry> base_side;          // all of side B
  // base_side indices matched 1-1 with proper_quotient_ideals, in order.
  std::vector<std::size_t> matching;
  bool bijection_ok;
};

IdealCorrespondenceReport check_ideal_correspondence(
    const LocalizedMonoid& loc);

struct IrreducibleCorrespondenceReport {
  std::vector<ElementSet> strongly_irreducible_proper;  // in M_S
  std::vector<ElementSet> irreducible_avoiding;  // in M, inside C, S-disjoint
  bool contraction_lands_in_side_b;
  bool extension_lands_in_side_a;
  bool round_trips_identity;
  bool bijection_ok;
};

IrreducibleCorrespondenceReport check_irreducible_correspondence(
    const LocalizedMonoid& loc);

struct PrimaryLocalEquivalenceEntry {
  std::string monoid;
  bool primary_irreducible_at_maximal;  // in M_m, m the maximal ideal
  bool primary_irreducible_global;      // in M itself
  bool primary_irreducible_at_primes;   // in M_P for every prime P
  bool equivalent;
};

/// Evaluates the three statements directly per monoid and reports whether
/// they agree (all true or all false).
std::vector<PrimaryLocalEquivalenceEntry> check_primary_local_equivalence(
    const std::vector<NamedMonoid>& corpus);

/// Every multiplicatively closed subset, optionally excluding those that
/// contain zero, in ascending bit order.
std::vector<ElementSet> enumerate_mult_closed_sets(const FiniteMonoid& m,
                                                   bool exclude_zero);

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_LOCALIZATION_HPP_
