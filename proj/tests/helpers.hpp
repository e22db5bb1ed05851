#pragma once

// Small groups and brute-force oracles shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/perm.hpp"

namespace testing {

using skewbrace::Element;
using skewbrace::FiniteGroup;

// Symmetric group on 3 letters; element i is the i-th permutation of {0,1,2}
// in lexicographic order, so 0 is the identity.
inline FiniteGroup symmetric3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Element>> rows(6, std::vector<Element>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      rows[a][b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return skewbrace::validate_group_table(rows, "6/S3");
}

// Dihedral group of order 2m: r^k s^e encoded as e*m + k.
inline FiniteGroup dihedral(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t e1 = x / m, k1 = x % m, e2 = y / m, k2 = y % m;
      // r^k1 s^e1 r^k2 s^e2 = r^(k1 +- k2) s^(e1+e2)
      const std::size_t k = e1 ? (k1 + m - k2) % m : (k1 + k2) % m;
      t[x * n + y] = static_cast<Element>(((e1 + e2) % 2) * m + k);
    }
  }
  return skewbrace::validate_group_table(std::move(t), n, std::to_string(n) + "/D" + std::to_string(n));
}

inline FiniteGroup relabel(const FiniteGroup& g, const std::vector<Element>& perm) {
  // perm[old] = new; keeps 0 fixed when perm[0] == 0.
  const std::size_t n = g.order();
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
  }
  return skewbrace::validate_group_table(std::move(t), n, g.label());
}

// Every bijection of the carrier fixing 0 that preserves the table.
inline std::vector<std::vector<Element>> brute_force_automorphisms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      for (Element b = 0; b < n && ok; ++b) ok = p[g.mul(a, b)] == g.mul(p[a], p[b]);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// Every bijection (not only those fixing 0) that is an isomorphism g -> h.
inline bool brute_force_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  const std::size_t n = g.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      for (Element b = 0; b < n && ok; ++b) ok = p[g.mul(a, b)] == h.mul(p[a], p[b]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Closure of a set of permutations under composition.
inline std::vector<skewbrace::Perm> closure(const std::vector<skewbrace::Perm>& gens,
                                            std::size_t degree) {
  std::vector<skewbrace::Perm> out = {skewbrace::Perm::identity(degree)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto y = skewbrace::compose(out[i], g);
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing
