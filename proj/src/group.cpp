#include "skewbrace/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewbrace/error.hpp"

namespace skewbrace {

namespace {

constexpr Element kUnset = ~Element{0};

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::vector<Element> inverse_table(const std::vector<Element>& table, std::size_t n) {
  std::vector<Element> inv(n, kUnset);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] == 0) {
        inv[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  return inv;
}

void partitions_desc(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_desc(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::string name_part(const std::string& label) {
  const auto slash = label.find('/');
  return slash == std::string::npos ? label : label.substr(slash + 1);
}

}  // namespace

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inv_{0}, label_("1/C1") {}

FiniteGroup::FiniteGroup(std::vector<Element> table, std::vector<Element> inv, std::size_t n,
                         std::string label)
    : n_(n), table_(std::move(table)), inv_(std::move(inv)), label_(std::move(label)) {}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<Element> table, std::size_t n,
                                            std::string label) {
  auto inv = inverse_table(table, n);
  return FiniteGroup(std::move(table), std::move(inv), n, std::move(label));
}

FiniteGroup validate_group_table(std::vector<Element> table, std::size_t n, std::string label) {
  using Kind = GroupTableError::Kind;
  if (n == 0 || table.size() != n * n) {
    throw GroupTableError(Kind::NotSquare, "table is not a non-empty square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] >= n) {
        throw GroupTableError(Kind::NotClosed, "entry at (" + std::to_string(a) + ", " +
                                                   std::to_string(b) + ") is out of range");
      }
    }
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[c * n + x] == x && table[x * n + c] == x;
    }
    if (ok) e = c;
  }
  if (e == n) throw GroupTableError(Kind::NoIdentity, "no two-sided identity element");

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      found = table[a * n + b] == e && table[b * n + a] == e;
    }
    if (!found) {
      throw GroupTableError(Kind::NoInverse, "element " + std::to_string(a) + " has no inverse");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = table[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
          throw GroupTableError(Kind::NotAssociative, "(a*b)*c != a*(b*c) at (a, b, c) = " +
                                                          triple(a, b, c));
        }
      }
    }
  }

  if (e != 0) {
    // Swap the labels e and 0.
    auto relabel = [e](Element x) -> Element {
      if (x == e) return 0;
      if (x == 0) return static_cast<Element>(e);
      return x;
    };
    std::vector<Element> out(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out[relabel(static_cast<Element>(a)) * n + relabel(static_cast<Element>(b))] =
            relabel(table[a * n + b]);
      }
    }
    table = std::move(out);
  }
  return FiniteGroup::from_trusted_table(std::move(table), n, std::move(label));
}

FiniteGroup validate_group_table(const std::vector<std::vector<Element>>& rows,
                                 std::string label) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw GroupTableError(GroupTableError::Kind::NotSquare, "table is not square");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_group_table(std::move(flat), n, std::move(label));
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::from_trusted_table(std::move(t), n,
                                         std::to_string(n) + "/C" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / m), xh = static_cast<Element>(x % m);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / m), yh = static_cast<Element>(y % m);
      t[x * n + y] = static_cast<Element>(g.mul(xa, ya) * m + h.mul(xh, yh));
    }
  }
  return FiniteGroup::from_trusted_table(
      std::move(t), n, std::to_string(n) + "/" + name_part(g.label()) + "x" + name_part(h.label()));
}

bool is_abelian(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t element_order(const FiniteGroup& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (Element a = 0; a < g.order(); ++a) out[a] = element_order(g, a);
  return out;
}

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (auto o : element_orders(g)) e = std::lcm(e, o);
  return e;
}

std::vector<std::size_t> centralizer_sizes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> out(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out[a] += g.mul(a, b) == g.mul(b, a);
  }
  return out;
}

std::size_t center_size(const FiniteGroup& g) {
  const auto c = centralizer_sizes(g);
  return static_cast<std::size_t>(std::count(c.begin(), c.end(), g.order()));
}

std::vector<Element> subgroup_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto orders = element_orders(g);
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders[a] > orders[b]; });

  std::vector<Element> gens;
  std::vector<char> in_sub(n, 0);
  in_sub[0] = 1;
  std::size_t sub_size = 1;
  for (Element x : by_order) {
    if (sub_size == n) break;
    if (in_sub[x]) continue;
    gens.push_back(x);
    const auto sub = subgroup_closure(g, gens);
    for (Element y : sub) in_sub[y] = 1;
    sub_size = sub.size();
  }
  return gens;
}

FiniteGroup abelian_group(std::span<const std::size_t> factors) {
  FiniteGroup out;
  std::string name;
  std::size_t n = 1;
  for (std::size_t f : factors) {
    out = direct_product(out, cyclic_group(f));
    n *= f;
    if (!name.empty()) name += "x";
    name += "C" + std::to_string(f);
  }
  if (name.empty()) name = "C1";
  out.set_label(std::to_string(n) + "/" + name);
  return out;
}

std::vector<FiniteGroup> abelian_groups_of_order(std::size_t n) {
  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<std::size_t>>> parts_per_prime;
  for (const auto& [p, e] : primes) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions_desc(e, e, cur, parts);
    parts_per_prime.push_back(std::move(parts));
  }

  std::vector<FiniteGroup> out;
  std::vector<std::size_t> choice(primes.size(), 0);
  while (true) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      width = std::max(width, parts_per_prime[i][choice[i]].size());
    }
    // j-th invariant factor collects the j-th largest part of every prime.
    std::vector<std::size_t> factors(width, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& part = parts_per_prime[i][choice[i]];
      for (std::size_t j = 0; j < part.size(); ++j) factors[j] *= ipow(primes[i].first, part[j]);
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(abelian_group(factors));

    // Odometer with the first prime varying slowest.
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++choice[i] < parts_per_prime[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (primes.empty()) return out;
  }
}

std::vector<std::size_t> isomorphism_invariants(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto orders = element_orders(g);
  const auto cent = centralizer_sizes(g);
  std::vector<std::size_t> codes(n);
  for (std::size_t a = 0; a < n; ++a) codes[a] = orders[a] * (n + 1) + cent[a];
  std::sort(codes.begin(), codes.end());

  std::vector<Element> commutators;
  {
    std::vector<char> seen(n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        const Element c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }
  }
  const std::size_t derived = subgroup_closure(g, commutators).size();

  std::vector<std::size_t> out{n, derived};
  out.insert(out.end(), codes.begin(), codes.end());
  return out;
}

void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(std::span<const Element>)>& visit) {
  const std::size_t n = g.order();
  if (h.order() != n) return;

  const auto gens = generating_set(g);
  const std::size_t k = gens.size();
  if (k == 0) {
    const Element id = 0;
    visit(std::span<const Element>(&id, 1));
    return;
  }

  const auto ord_g = element_orders(g), ord_h = element_orders(h);
  const auto cen_g = centralizer_sizes(g), cen_h = centralizer_sizes(h);
  std::vector<std::vector<Element>> cands(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Element y = 0; y < n; ++y) {
      if (ord_h[y] == ord_g[gens[i]] && cen_h[y] == cen_g[gens[i]]) cands[i].push_back(y);
    }
    if (cands[i].empty()) return;
  }

  std::vector<Element> images(k);
  std::vector<Element> map(n);
  std::vector<char> used(n);
  std::vector<Element> queue;
  queue.reserve(n);

  // Defines the map on <gens[0..level]> from the chosen images; false if
  // the assignment is not a well-defined injective homomorphism there.
  auto extend = [&](std::size_t level) {
    std::fill(map.begin(), map.end(), kUnset);
    std::fill(used.begin(), used.end(), 0);
    map[0] = 0;
    used[0] = 1;
    queue.assign(1, 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Element x = queue[qi];
      for (std::size_t i = 0; i <= level; ++i) {
        const Element y = g.mul(x, gens[i]);
        const Element fy = h.mul(map[x], images[i]);
        if (map[y] == kUnset) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    for (Element y : cands[level]) {
      images[level] = y;
      if (!extend(level)) continue;
      if (level + 1 == k) {
        if (!visit(map)) {
          stop = true;
          return;
        }
      } else {
        rec(level + 1);
        if (stop) return;
      }
    }
  };
  rec(0);
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (isomorphism_invariants(g) != isomorphism_invariants(h)) return std::nullopt;
  std::optional<std::vector<Element>> out;
  for_each_isomorphism(g, h, [&](std::span<const Element> phi) {
    out.emplace(phi.begin(), phi.end());
    return false;
  });
  return out;
}

bool isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::size_t n) {
  const auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace skewbrace
