#include "skewbrace/brace.hpp"

#include "skewbrace/error.hpp"

namespace skewbrace {

namespace {

void require_closure(const AutGroup& a, const LambdaFunction& lam) {
  if (!satisfies_closure(a, lam)) {
    throw ClosureViolated("lambda function of " + a.group().label() +
                          " does not describe a regular subgroup");
  }
}

bool is_group_with_identity_zero(std::span<const Element> table, std::size_t n) {
  if (table.size() != n * n) return false;
  for (Element x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x) return false;
  }
  try {
    validate_group_table(std::vector<Element>(table.begin(), table.end()), n, "");
  } catch (const GroupTableError&) {
    return false;
  }
  return true;
}

}  // namespace

std::uint64_t lambda_hash(const LambdaFunction& lam) {
  // FNV-1a over the values.
  std::uint64_t h = 1469598103934665603ULL;
  for (AutIndex v : lam.values) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

SkewBrace brace_from_transversal(const AutGroup& a, const LambdaFunction& lam) {
  require_closure(a, lam);
  const FiniteGroup& g = a.group();
  const std::size_t n = g.order();
  std::vector<Element> circ(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) circ[x * n + y] = g.mul(x, a.apply(lam[x], y));
  }
  return SkewBrace(g, std::move(circ), lambda_hash(lam));
}

SkewBrace brace_via_chi(const AutGroup& a, const LambdaFunction& lam, ChiOrder order) {
  require_closure(a, lam);
  const FiniteGroup& g = a.group();
  const std::size_t n = g.order();
  // (lam_c, c) sends x to c + lam_c(x), which is 0 for x = lam_c^-1(-c).
  std::vector<Element> chi(n), chi_inv(n);
  for (Element c = 0; c < n; ++c) {
    const Element x = a.apply(a.inverse(lam[c]), g.inv(c));
    chi[x] = c;
    chi_inv[c] = x;
  }
  std::vector<Element> circ(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element first = order == ChiOrder::kLiteral ? chi[x] : chi[y];
      const Element second = order == ChiOrder::kLiteral ? chi[y] : chi[x];
      const HolElement p = hol_product(a, {lam[first], first}, {lam[second], second});
      circ[x * n + y] = chi_inv[p.g];
    }
  }
  return SkewBrace(g, std::move(circ), lambda_hash(lam));
}

std::optional<std::array<Element, 3>> brace_identity_violation(const SkewBrace& b) {
  const std::size_t n = b.order();
  const FiniteGroup& g = b.add();
  for (Element x = 0; x < n; ++x) {
    const Element neg = g.inv(x);
    for (Element y = 0; y < n; ++y) {
      const Element left_part = g.mul(b.circ(x, y), neg);
      for (Element z = 0; z < n; ++z) {
        if (b.circ(x, g.mul(y, z)) != g.mul(left_part, b.circ(x, z))) {
          return std::array<Element, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_skew_brace(const SkewBrace& b) {
  const std::size_t n = b.order();
  if (!is_group_with_identity_zero(b.add().table(), n)) return false;
  if (!is_group_with_identity_zero(b.circ_table(), n)) return false;
  return !brace_identity_violation(b).has_value();
}

bool is_left_brace(const SkewBrace& b) { return is_abelian(b.add()); }

FiniteGroup multiplicative_group(const SkewBrace& b) {
  const auto t = b.circ_table();
  return FiniteGroup::from_trusted_table(std::vector<Element>(t.begin(), t.end()), b.order(),
                                         std::to_string(b.order()) + "/circ");
}

bool brace_isomorphic(const SkewBrace& b1, const SkewBrace& b2) {
  if (b1.order() != b2.order()) return false;
  if (isomorphism_invariants(b1.add()) != isomorphism_invariants(b2.add())) return false;
  const FiniteGroup m1 = multiplicative_group(b1);
  const FiniteGroup m2 = multiplicative_group(b2);
  if (isomorphism_invariants(m1) != isomorphism_invariants(m2)) return false;
  if (!isomorphic(m1, m2)) return false;

  const std::size_t n = b1.order();
  bool found = false;
  for_each_isomorphism(b1.add(), b2.add(), [&](std::span<const Element> phi) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (phi[b1.circ(x, y)] != b2.circ(phi[x], phi[y])) return true;
      }
    }
    found = true;
    return false;
  });
  return found;
}

}  // namespace skewbrace
