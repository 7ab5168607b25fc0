#ifndef MONOID_IDEALS_CORPUS_HPP_
#define MONOID_IDEALS_CORPUS_HPP_

#include <string>
#include <vector>

#include "monoid_ideals/monoid.hpp"

namespace monoid_ideals {

struct NamedMonoid {
  std::string name;
  FiniteMonoid monoid;
};

/// The fixed default corpus: zn(2)..zn(12), chain(1)..chain(6),
/// zn(2)xzn(3), and zn(4)xchain(2).
std::vector<NamedMonoid> default_corpus();

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_CORPUS_HPP_
