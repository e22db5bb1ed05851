#pragma once

// Finite groups stored as Cayley tables on the carrier {0, ..., n-1}.
//
// The identity is always element 0.  Tables are row-major: mul(a, b) is
// table[a * n + b].

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewbrace {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::span<const Element> row(Element a) const noexcept { return {table_.data() + a * n_, n_}; }
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inv_; }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  // Builds a group from a table already known to satisfy the group axioms
  // with identity 0 (products of valid groups, cyclic groups, extensions).
  static FiniteGroup from_trusted_table(std::vector<Element> table, std::size_t n,
                                        std::string label);

 private:
  FiniteGroup(std::vector<Element> table, std::vector<Element> inv, std::size_t n,
              std::string label);

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::string label_;
};

/// Checks the group axioms and relabels so that the identity is element 0.
/// Throws GroupTableError naming the first offending entry or triple.
FiniteGroup validate_group_table(std::vector<Element> table, std::size_t n, std::string label);
FiniteGroup validate_group_table(const std::vector<std::vector<Element>>& rows,
                                 std::string label);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

bool is_abelian(const FiniteGroup& g);
std::size_t element_order(const FiniteGroup& g, Element a);
std::vector<std::size_t> element_orders(const FiniteGroup& g);
std::size_t exponent(const FiniteGroup& g);
std::size_t center_size(const FiniteGroup& g);

/// Sizes of the centralizers C(a), indexed by element.
std::vector<std::size_t> centralizer_sizes(const FiniteGroup& g);

/// Elements of the subgroup generated by `gens`, in breadth-first order from 0.
std::vector<Element> subgroup_closure(const FiniteGroup& g, std::span<const Element> gens);

/// Greedy generating set: repeatedly adds an element of largest order that
/// is not yet in the generated subgroup (ties broken by smallest index).
std::vector<Element> generating_set(const FiniteGroup& g);

/// Abelian groups of order n, one per isomorphism class.  Built from the
/// partitions of each prime exponent in lexicographically descending order
/// and written as products of cyclic invariant factors; labels look like
/// "175/C5xC35".
std::vector<FiniteGroup> abelian_groups_of_order(std::size_t n);

/// Abelian group with the given invariant factors, e.g. {5, 35}.
FiniteGroup abelian_group(std::span<const std::size_t> factors);

/// A sorted, relabeling-invariant fingerprint (order, abelian flag,
/// element-order histogram, center size, class sizes).  Isomorphic groups
/// have equal fingerprints.
std::vector<std::size_t> isomorphism_invariants(const FiniteGroup& g);

/// An isomorphism g -> h as an image array, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Calls `visit` on every isomorphism g -> h (as an image array) until it
/// returns false.  Generator images are chosen by backtracking, pruned by
/// element order and centralizer size.
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(std::span<const Element>)>& visit);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n);
bool is_prime(std::size_t n);

}  // namespace skewbrace
