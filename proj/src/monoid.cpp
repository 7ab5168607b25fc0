#include "monoid_ideals/monoid.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace monoid_ideals {

FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& table,
                             int identity, int zero,
                             std::vector<std::string> labels,
                             int max_elements) {
  const int n = static_cast<int>(table.size());
  if (n < 1) {
    throw MonoidError(ErrorCode::IndexOutOfRange, "table must be nonempty");
  }
  if (n > max_elements || n > kMaxElements) {
    throw MonoidError(ErrorCode::SizeOverflow,
                      "table has " + std::to_string(n) +
                          " elements, cap is " +
                          std::to_string(std::min(max_elements, kMaxElements)));
  }
  if (identity < 0 || identity >= n || zero < 0 || zero >= n) {
    throw MonoidError(ErrorCode::IndexOutOfRange,
                      "identity or zero index outside [0," +
                          std::to_string(n) + ")",
                      {identity, zero, -1});
  }

  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n) {
      throw MonoidError(ErrorCode::IndexOutOfRange,
                        "row " + std::to_string(a) + " has " +
                            std::to_string(table[static_cast<std::size_t>(a)].size()) +
                            " entries, expected " + std::to_string(n),
                        {a, -1, -1});
    }
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) {
        throw MonoidError(ErrorCode::IndexOutOfRange,
                          "entry (" + std::to_string(a) + "," +
                              std::to_string(b) + ") = " + std::to_string(v),
                          {a, b, v});
      }
      flat.push_back(v);
    }
  }

  auto at = [&](int a, int b) {
    return flat[static_cast<std::size_t>(a) * n + b];
  };

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (at(a, at(b, c)) != at(at(a, b), c)) {
          throw MonoidError(ErrorCode::NotAssociative,
                            "a(bc) != (ab)c at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) +
                                ")",
                            {a, b, c});
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (at(a, b) != at(b, a)) {
        throw MonoidError(ErrorCode::NotCommutative,
                          "ab != ba at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")",
                          {a, b, -1});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (at(identity, a) != a) {
      throw MonoidError(ErrorCode::BadIdentity,
                        "1*a != a at a=" + std::to_string(a), {a, -1, -1});
    }
  }
  for (int a = 0; a < n; ++a) {
    if (at(zero, a) != zero) {
      throw MonoidError(ErrorCode::BadZero,
                        "0*a != 0 at a=" + std::to_string(a), {a, -1, -1});
    }
  }
  if (n > 1 && identity == zero) {
    throw MonoidError(ErrorCode::BadZero, "identity equals zero with n > 1",
                      {identity, -1, -1});
  }

  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw MonoidError(ErrorCode::BadLabels,
                      "expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || !seen.insert(l).second) {
      throw MonoidError(ErrorCode::BadLabels,
                        "labels must be nonempty and distinct: \"" + l + "\"");
    }
  }

  return FiniteMonoid(n, std::move(flat), identity, zero, std::move(labels));
}

FiniteMonoid zn_mul(int n) {
  if (n < 1) {
    throw MonoidError(ErrorCode::IndexOutOfRange, "zn_mul requires n >= 1");
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a * b) % n;
    }
  }
  return validate_monoid(table, n == 1 ? 0 : 1, 0);
}

FiniteMonoid chain_monoid(int k) {
  if (k < 1) {
    throw MonoidError(ErrorCode::IndexOutOfRange, "chain requires k >= 1");
  }
  const int n = k + 1;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(i + j, k);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.push_back("1");
  for (int i = 1; i <= k; ++i) {
    labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return validate_monoid(table, 0, k, std::move(labels));
}

FiniteMonoid direct_product(const FiniteMonoid& m1, const FiniteMonoid& m2,
                            int max_elements) {
  const int n1 = m1.size();
  const int n2 = m2.size();
  const int cap = std::min(max_elements, kMaxElements);
  if (n1 * n2 > cap) {  // factors are <= 64 each, no overflow
    throw MonoidError(ErrorCode::SizeOverflow,
                      std::to_string(n1) + "*" + std::to_string(n2) +
                          " exceeds element cap " + std::to_string(cap));
  }
  const int n = n1 * n2;
  auto idx = [n2](int a1, int a2) { return a1 * n2 + a2; };
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int a1 = 0; a1 < n1; ++a1) {
    for (int a2 = 0; a2 < n2; ++a2) {
      labels[static_cast<std::size_t>(idx(a1, a2))] = m1.label(a1) + "|" + m2.label(a2);
      for (int b1 = 0; b1 < n1; ++b1) {
        for (int b2 = 0; b2 < n2; ++b2) {
          table[static_cast<std::size_t>(idx(a1, a2))][static_cast<std::size_t>(idx(b1, b2))] =
              idx(m1.mul(a1, b1), m2.mul(a2, b2));
        }
      }
    }
  }
  return validate_monoid(table, idx(m1.identity(), m2.identity()),
                         idx(m1.zero(), m2.zero()), std::move(labels),
                         max_elements);
}

ElementSet units(const FiniteMonoid& m) {
  ElementSet out = ElementSet::empty(m.size());
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) {
      if (m.mul(a, b) == m.identity()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

Homomorphism validate_hom(const FiniteMonoid& source,
                          const FiniteMonoid& target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.size()) {
    throw MonoidError(ErrorCode::NotHomomorphism,
                      "map has " + std::to_string(map.size()) +
                          " entries, expected " +
                          std::to_string(source.size()));
  }
  for (int a = 0; a < source.size(); ++a) {
    int v = map[static_cast<std::size_t>(a)];
    if (v < 0 || v >= target.size()) {
      throw MonoidError(ErrorCode::IndexOutOfRange,
                        "image of " + std::to_string(a) + " is " +
                            std::to_string(v),
                        {a, v, -1});
    }
  }
  if (map[static_cast<std::size_t>(source.identity())] != target.identity()) {
    throw MonoidError(ErrorCode::NotHomomorphism, "phi(1) != 1",
                      {source.identity(), -1, -1});
  }
  for (int a = 0; a < source.size(); ++a) {
    for (int b = a; b < source.size(); ++b) {
      int lhs = map[static_cast<std::size_t>(source.mul(a, b))];
      int rhs = target.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
      if (lhs != rhs) {
        throw MonoidError(ErrorCode::NotHomomorphism,
                          "phi(ab) != phi(a)phi(b) at (" + std::to_string(a) +
                              "," + std::to_string(b) + ")",
                          {a, b, -1});
      }
    }
  }
  return Homomorphism{&source, &target, std::move(map)};
}

bool is_pointed_hom(const Homomorphism& phi) {
  return phi.apply(phi.source->zero()) == phi.target->zero();
}

bool is_surjective(const Homomorphism& phi) {
  ElementSet image = ElementSet::empty(phi.target->size());
  for (int a = 0; a < phi.source->size(); ++a) image.insert(phi.apply(a));
  return image.is_full();
}

}  // namespace monoid_ideals
