#include "skewbrace/holomorph.hpp"

namespace skewbrace {

Perm action_perm(const AutGroup& a, HolElement x) {
  const std::size_t n = a.group().order();
  std::vector<Point> img(n);
  for (Element g = 0; g < n; ++g) img[g] = hol_action(a, x, g);
  return Perm(std::move(img));
}

std::optional<HolElement> hol_element_of(const AutGroup& a, const Perm& p) {
  const FiniteGroup& grp = a.group();
  const std::size_t n = grp.order();
  if (p.degree() != n) return std::nullopt;
  const Element h = p[0];
  const Element hinv = grp.inv(h);
  std::vector<Element> alpha(n);
  for (Element g = 0; g < n; ++g) alpha[g] = grp.mul(hinv, p[g]);
  const auto idx = a.index_of(alpha);
  if (!idx) return std::nullopt;
  return HolElement{*idx, h};
}

PermGroup hol_as_perm_group(const AutGroup& a) {
  const std::size_t n = a.group().order();
  std::vector<Perm> gens;
  for (Element g : generating_set(a.group())) gens.push_back(action_perm(a, {a.identity(), g}));
  for (const auto& alpha : a.perms().generators()) {
    gens.push_back(action_perm(a, {*a.index_of(alpha), 0}));
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace skewbrace
