#pragma once

// Skew left braces (G, +, o): two group laws on one carrier with
//   a o (b + c) = (a o b) - a + (a o c).
// Both laws have identity 0.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/regular.hpp"

namespace skewbrace {

class SkewBrace {
 public:
  /// No validation; see verify_skew_brace.
  SkewBrace(FiniteGroup add, std::vector<Element> circ, std::uint64_t source_hash = 0)
      : add_(std::move(add)), circ_(std::move(circ)), source_hash_(source_hash) {}

  std::size_t order() const noexcept { return add_.order(); }
  const FiniteGroup& add() const noexcept { return add_; }
  std::span<const Element> circ_table() const noexcept { return circ_; }
  Element plus(Element a, Element b) const noexcept { return add_.mul(a, b); }
  Element circ(Element a, Element b) const noexcept { return circ_[a * order() + b]; }

  const std::string& add_group_id() const noexcept { return add_.label(); }
  /// Hash of the lambda function the brace was built from, 0 if none.
  std::uint64_t source_hash() const noexcept { return source_hash_; }

 private:
  FiniteGroup add_;
  std::vector<Element> circ_;
  std::uint64_t source_hash_;
};

std::uint64_t lambda_hash(const LambdaFunction& lam);

/// a o b = a + lam_a(b).  Throws ClosureViolated if lam is not a transversal
/// of a regular subgroup.
SkewBrace brace_from_transversal(const AutGroup& a, const LambdaFunction& lam);

enum class ChiOrder {
  /// g1 o g2 = chi^-1(chi(g2) chi(g1)); matches the left action of Hol(G).
  kActionCompatible,
  /// g1 o g2 = chi^-1(chi(g1) chi(g2)); yields the opposite law, which in
  /// general is not a brace over the same addition.
  kLiteral,
};

/// Transports the subgroup product along chi, where chi(g) is the element of
/// {(lam_a, a)} that sends g to 0.  Throws ClosureViolated on an invalid lam.
SkewBrace brace_via_chi(const AutGroup& a, const LambdaFunction& lam,
                        ChiOrder order = ChiOrder::kActionCompatible);

/// Both tables are groups with identity 0, and the brace identity holds for
/// every triple.
bool verify_skew_brace(const SkewBrace& b);

/// First triple (a, b, c) violating the brace identity, if any.
std::optional<std::array<Element, 3>> brace_identity_violation(const SkewBrace& b);

bool is_left_brace(const SkewBrace& b);

FiniteGroup multiplicative_group(const SkewBrace& b);

/// A bijection preserving both laws exists.  Additive and multiplicative
/// invariants are compared first; then additive isomorphisms are searched
/// for one that also preserves o.
bool brace_isomorphic(const SkewBrace& b1, const SkewBrace& b2);

}  // namespace skewbrace
