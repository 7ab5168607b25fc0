#ifndef MONOID_IDEALS_ELEMENT_SET_HPP_
#define MONOID_IDEALS_ELEMENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace monoid_ideals {

// Subsets of a monoid with at most 64 elements fit in one word. The
// universe size travels with the set so complements and full-set tests
// stay unambiguous.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet empty(int universe) { return ElementSet(universe, 0); }

  static ElementSet full(int universe) {
    return ElementSet(universe, mask_of(universe));
  }

  static ElementSet single(int universe, int a) {
    ElementSet s = empty(universe);
    s.insert(a);
    return s;
  }

  static ElementSet of(int universe, std::initializer_list<int> elems) {
    ElementSet s = empty(universe);
    for (int a : elems) s.insert(a);
    return s;
  }

  static ElementSet from_bits(int universe, std::uint64_t bits) {
    assert((bits & ~mask_of(universe)) == 0);
    return ElementSet(universe, bits);
  }

  int universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }

  void insert(int a) {
    assert(a >= 0 && a < universe_);
    bits_ |= std::uint64_t{1} << a;
  }

  void erase(int a) {
    assert(a >= 0 && a < universe_);
    bits_ &= ~(std::uint64_t{1} << a);
  }

  bool contains(int a) const {
    assert(a >= 0 && a < universe_);
    return (bits_ >> a) & 1;
  }

  int count() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == mask_of(universe_); }

  bool subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  bool intersects(const ElementSet& other) const {
    return (bits_ & other.bits_) != 0;
  }

  ElementSet intersect(const ElementSet& other) const {
    return ElementSet(universe_, bits_ & other.bits_);
  }

  ElementSet unite(const ElementSet& other) const {
    return ElementSet(universe_, bits_ | other.bits_);
  }

  ElementSet complement() const {
    return ElementSet(universe_, ~bits_ & mask_of(universe_));
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

  // Canonical order: cardinality first, then the set containing the
  // smallest differing element. Deterministic reports depend on it.
  static bool canonical_less(const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits_ & low) != 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int a = 0; a < universe_; ++a) {
      if (contains(a)) out.push_back(a);
    }
    return out;
  }

  // "{0,2,4}" with members ascending.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int a : to_vector()) {
      if (!first) out += ",";
      out += std::to_string(a);
      first = false;
    }
    out += "}";
    return out;
  }

 private:
  ElementSet(int universe, std::uint64_t bits)
      : universe_(universe), bits_(bits) {
    assert(universe >= 0 && universe <= 64);
  }

  static std::uint64_t mask_of(int universe) {
    return universe >= 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << universe) - 1;
  }

  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_ELEMENT_SET_HPP_
