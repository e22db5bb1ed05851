#pragma once

// The holomorph Hol(G) = Aut(G) x| G with product
//   (a, g)(b, h) = (ab, g a(h))
// acting on G by
//   g^(a, h) = h a(g).
// With ab the composite "b first, then a", this action satisfies
//   g^(xy) = (g^y)^x,
// i.e. the product xy acts by applying y first.

#include <compare>
#include <cstddef>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

struct HolElement {
  AutIndex aut = 0;
  Element g = 0;

  auto operator<=>(const HolElement&) const = default;
};

inline HolElement hol_product(const AutGroup& a, HolElement x, HolElement y) {
  return {a.mul(x.aut, y.aut), a.group().mul(x.g, a.apply(x.aut, y.g))};
}

inline HolElement hol_inverse(const AutGroup& a, HolElement x) {
  const AutIndex ainv = a.inverse(x.aut);
  return {ainv, a.apply(ainv, a.group().inv(x.g))};
}

inline Element hol_action(const AutGroup& a, HolElement x, Element g) {
  return a.group().mul(x.g, a.apply(x.aut, g));
}

/// x^-1 y x.
inline HolElement hol_conjugate(const AutGroup& a, HolElement y, HolElement x) {
  return hol_product(a, hol_product(a, hol_inverse(a, x), y), x);
}

/// The permutation g -> g^x of the carrier.
Perm action_perm(const AutGroup& a, HolElement x);

/// Inverse of action_perm: recovers (a, h) from a permutation of the
/// carrier, if it lies in Hol(G).  h is the image of 0.
std::optional<HolElement> hol_element_of(const AutGroup& a, const Perm& p);

/// Hol(G) acting faithfully on the carrier, generated by the translations
/// of a generating set of G and the generators of Aut(G).
PermGroup hol_as_perm_group(const AutGroup& a);

inline std::size_t hol_order(const AutGroup& a) { return a.size() * a.group().order(); }

}  // namespace skewbrace
