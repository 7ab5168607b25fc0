#ifndef MONOID_IDEALS_MONOID_HPP_
#define MONOID_IDEALS_MONOID_HPP_

#include <string>
#include <vector>

#include "monoid_ideals/element_set.hpp"
#include "monoid_ideals/errors.hpp"

namespace monoid_ideals {

// Hard structural bound: element sets are single 64-bit words.
inline constexpr int kMaxElements = 64;

/// A finite commutative monoid with an absorbing zero, held as a Cayley
/// table over dense element indices 0..n-1. Immutable once validated;
/// labels are presentation-only and take no part in equality.
class FiniteMonoid {
 public:
  int size() const { return n_; }
  int identity() const { return identity_; }
  int zero() const { return zero_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }

  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  ElementSet full_set() const { return ElementSet::full(n_); }

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.n_ == b.n_ && a.identity_ == b.identity_ && a.zero_ == b.zero_ &&
           a.table_ == b.table_;
  }

 private:
  FiniteMonoid(int n, std::vector<int> table, int identity, int zero,
               std::vector<std::string> labels)
      : n_(n),
        table_(std::move(table)),
        identity_(identity),
        zero_(zero),
        labels_(std::move(labels)) {}

  friend FiniteMonoid validate_monoid(const std::vector<std::vector<int>>&,
                                      int, int, std::vector<std::string>,
                                      int);

  int n_;
  std::vector<int> table_;  // row-major n*n
  int identity_;
  int zero_;
  std::vector<std::string> labels_;
};

/// Checks every monoid axiom on a raw table and returns the validated
/// monoid. Throws MonoidError naming the first violated axiom together
/// with a witness triple. Labels default to the index strings.
FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& table,
                             int identity, int zero,
                             std::vector<std::string> labels = {},
                             int max_elements = kMaxElements);

/// {0..n-1} under multiplication mod n; identity 1 (0 when n = 1), zero 0.
FiniteMonoid zn_mul(int n);

/// {1, a, a^2, ..., a^k = 0} with a^i * a^j = a^min(i+j,k).
FiniteMonoid chain_monoid(int k);

/// Componentwise product with labels "x|y". Throws SizeOverflow when the
/// result would exceed max_elements.
FiniteMonoid direct_product(const FiniteMonoid& m1, const FiniteMonoid& m2,
                            int max_elements = kMaxElements);

/// Invertible elements { a | ab = 1 for some b }.
ElementSet units(const FiniteMonoid& m);

/// A monoid homomorphism: map[identity] = identity and
/// map[ab] = map[a]map[b]. phi(0) = 0 is NOT required; see is_pointed_hom.
struct Homomorphism {
  const FiniteMonoid* source;
  const FiniteMonoid* target;
  std::vector<int> map;

  int apply(int a) const { return map[static_cast<std::size_t>(a)]; }
};

/// Checks the two homomorphism conditions; throws NotHomomorphism with a
/// witness pair otherwise.
Homomorphism validate_hom(const FiniteMonoid& source,
                          const FiniteMonoid& target, std::vector<int> map);

bool is_pointed_hom(const Homomorphism& phi);
bool is_surjective(const Homomorphism& phi);

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_MONOID_HPP_
