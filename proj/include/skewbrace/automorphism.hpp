#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

/// Position of an automorphism in AutGroup::elements().
using AutIndex = std::uint32_t;

inline constexpr std::size_t kDefaultAutCap = 1'000'000;

/// Aut(G) as a permutation group on the carrier of G, with every element
/// listed in lexicographic order of its image array.  The identity is always
/// index 0.
class AutGroup {
 public:
  /// Throws AutTooLarge when |Aut(G)| exceeds `cap`.
  static AutGroup compute(const FiniteGroup& g, std::size_t cap = kDefaultAutCap);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return count_; }
  AutIndex identity() const noexcept { return 0; }

  /// alpha(x) for the automorphism at `alpha`.
  Element apply(AutIndex alpha, Element x) const noexcept { return images_[alpha * n_ + x]; }
  std::span<const Element> images(AutIndex alpha) const noexcept {
    return {images_.data() + alpha * n_, n_};
  }
  Perm element(AutIndex alpha) const;

  /// The composite x -> a(b(x)), written ab as in the holomorph product.
  AutIndex mul(AutIndex a, AutIndex b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[a * count_ + b];
    std::uint64_t code = 0;
    for (std::size_t t = gens_.size(); t-- > 0;) code = code * n_ + apply(a, apply(b, gens_[t]));
    return lookup(code);
  }
  AutIndex inverse(AutIndex a) const noexcept { return inverse_[a]; }

  std::optional<AutIndex> index_of(std::span<const Element> images) const;
  std::optional<AutIndex> index_of(const Perm& p) const { return index_of(p.images()); }

  /// A generating set of Aut(G), chosen greedily along the element order.
  const PermGroup& perms() const noexcept { return perms_; }

 private:
  AutGroup(FiniteGroup g, std::vector<std::vector<Element>> sorted);
  AutIndex lookup(std::uint64_t code) const noexcept {
    if (!dense_.empty()) return dense_[code];
    return sparse_.at(code);
  }

  FiniteGroup group_;
  std::size_t n_;
  std::size_t count_;
  std::vector<Element> images_;
  std::vector<Element> gens_;  // generators of G; an automorphism is fixed by their images
  std::vector<AutIndex> dense_;
  std::unordered_map<std::uint64_t, AutIndex> sparse_;
  std::vector<AutIndex> inverse_;
  std::vector<AutIndex> mul_table_;
  PermGroup perms_;
};

inline AutGroup automorphism_group(const FiniteGroup& g, std::size_t cap = kDefaultAutCap) {
  return AutGroup::compute(g, cap);
}

bool is_automorphism(const FiniteGroup& g, const Perm& p);

}  // namespace skewbrace
