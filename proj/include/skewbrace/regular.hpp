#pragma once

// Regular subgroups of Hol(G) and their classification.
//
// A regular subgroup contains exactly one element with each second
// coordinate, so it is the set {(lam_a, a) : a in G} for a unique map
// a -> lam_a.  Closure under the holomorph product is the identity
//   lam_a lam_b = lam_{a + lam_a(b)}.
// Enumeration searches over such maps directly instead of over subgroups.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/holomorph.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

struct LambdaFunction {
  std::vector<AutIndex> values;

  AutIndex operator[](Element a) const noexcept { return values[a]; }
  std::size_t size() const noexcept { return values.size(); }
  auto operator<=>(const LambdaFunction&) const = default;
};

/// One Aut(G)-orbit of regular subgroups: the lexicographically smallest
/// lambda function in the orbit, and the orbit length.
struct RegularClass {
  LambdaFunction rep;
  std::size_t orbit_size = 0;

  auto operator<=>(const RegularClass&) const = default;
};

/// lam_0 = id and lam_a lam_b = lam_{a + lam_a(b)} for every pair.
bool satisfies_closure(const AutGroup& a, const LambdaFunction& lam);

/// The all-identity map: the translation subgroup {(id, g)}.
LambdaFunction translation_transversal(const AutGroup& a);

std::vector<HolElement> subgroup_of(const LambdaFunction& lam);

/// The lambda function of a set of holomorph elements with pairwise distinct
/// second coordinates covering G; throws NotASubgroup otherwise.
LambdaFunction transversal_of(const AutGroup& a, std::span<const HolElement> sub);

/// Free and transitive on G.  Throws NotASubgroup if `sub` is not closed.
bool is_regular(const AutGroup& a, std::span<const HolElement> sub);

/// All regular subgroups of Hol(G), as a sorted duplicate-free list.
///
/// Cells are decided in ascending order.  Each branch assigns an
/// automorphism to the least undecided cell and closes the partial subgroup
/// under the holomorph product; a cell receiving two different values aborts
/// the branch.  With threads > 1 the search is split at the first cell and
/// the subtrees merged in order, so the output does not depend on `threads`.
std::vector<LambdaFunction> enumerate_transversals(const AutGroup& a, unsigned threads = 1);

/// The conjugate subgroup x^-1 G x, as a lambda function.
LambdaFunction conjugate_transversal(const AutGroup& a, const LambdaFunction& lam, HolElement x);

/// Conjugation by (beta, 0): the result maps x to beta^-1 lam_{beta(x)} beta.
LambdaFunction act_by_automorphism(const AutGroup& a, const LambdaFunction& lam, AutIndex beta);

/// Partitions the complete output of enumerate_transversals into Aut(G)-orbits.
/// Classes are returned in increasing order of representative.
std::vector<RegularClass> aut_orbit_classes(const AutGroup& a, std::span<const LambdaFunction> all);

struct SylowEnumeration {
  PermGroup sylow;
  std::uint64_t sylow_order = 0;
  /// Regular subgroups contained in the Sylow subgroup.
  std::vector<LambdaFunction> inside;
  std::vector<RegularClass> classes;
};

/// Regular subgroups of a Sylow p-subgroup S of Hol(G), classified by
/// Aut(G)-conjugacy.  Orbits are computed in the full lambda space (they may
/// leave S) and deduplicated.  Throws NotAPGroup unless |G| is a prime power.
SylowEnumeration enumerate_via_sylow(const AutGroup& a, unsigned threads = 1);

inline constexpr std::size_t kDefaultHolCap = 5000;

struct ConjugacyEnumeration {
  std::size_t order_n_subgroups = 0;
  std::size_t regular_count = 0;
  std::vector<RegularClass> classes;
};

/// The slow strategy: every subgroup of order |G| of the permutation group
/// Hol(G) by element closure, filtered by regularity, grouped by explicit
/// conjugation with every element of Hol(G).  Throws HolTooLarge above `cap`.
ConjugacyEnumeration enumerate_via_subgroup_conjugacy(const AutGroup& a,
                                                      std::size_t cap = kDefaultHolCap);

inline std::vector<RegularClass> classes_via_subgroup_conjugacy(const AutGroup& a,
                                                                std::size_t cap = kDefaultHolCap) {
  return enumerate_via_subgroup_conjugacy(a, cap).classes;
}

}  // namespace skewbrace
