#include "skewbrace/regular.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "skewbrace/detail/parallel.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {

namespace {

constexpr AutIndex kUndecided = ~AutIndex{0};

using Candidates = std::vector<std::vector<AutIndex>>;

// Automorphisms alpha for which <(alpha, a)> acts semiregularly: no power
// other than the identity has second coordinate 0.  Every lam_a of a regular
// subgroup passes this test.
Candidates semiregular_candidates(const AutGroup& a) {
  const std::size_t n = a.group().order();
  Candidates out(n);
  out[0] = {a.identity()};
  for (Element cell = 1; cell < n; ++cell) {
    for (AutIndex alpha = 0; alpha < a.size(); ++alpha) {
      const HolElement x{alpha, cell};
      HolElement cur = x;
      while (cur.g != 0) cur = hol_product(a, cur, x);
      if (cur.aut == a.identity()) out[cell].push_back(alpha);
    }
  }
  return out;
}

class TransversalSearch {
 public:
  TransversalSearch(const AutGroup& a, const Candidates& cands)
      : a_(a), g_(a.group()), n_(g_.order()), cands_(cands), lam_(n_, kUndecided) {
    lam_[0] = a_.identity();
    members_.reserve(n_);
    members_.push_back(0);
  }

  // Adds (alpha, cell) as a generator and closes.  On conflict the state is
  // restored and false returned.
  bool push(Element cell, AutIndex alpha) {
    const std::size_t old_size = members_.size();
    lam_[cell] = alpha;
    members_.push_back(cell);
    gens_.push_back(cell);
    const std::size_t ng = gens_.size();
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const Element e = members_[i];
      const AutIndex le = lam_[e];
      for (std::size_t j = i < old_size ? ng - 1 : 0; j < ng; ++j) {
        const Element s = gens_[j];
        const AutIndex aut = a_.mul(le, lam_[s]);
        const Element y = g_.mul(e, a_.apply(le, s));
        if (lam_[y] == kUndecided) {
          lam_[y] = aut;
          members_.push_back(y);
        } else if (lam_[y] != aut) {
          rollback(old_size);
          return false;
        }
      }
    }
    return true;
  }

  void pop(std::size_t old_size) { rollback(old_size); }
  std::size_t mark() const noexcept { return members_.size(); }

  void run(Element from, std::vector<LambdaFunction>& out) {
    Element cell = from;
    while (cell < n_ && lam_[cell] != kUndecided) ++cell;
    if (cell == n_) {
      out.push_back(LambdaFunction{lam_});
      return;
    }
    const std::size_t m = mark();
    for (AutIndex alpha : cands_[cell]) {
      if (!push(cell, alpha)) continue;
      run(cell + 1, out);
      pop(m);
    }
  }

 private:
  void rollback(std::size_t old_size) {
    for (std::size_t i = old_size; i < members_.size(); ++i) lam_[members_[i]] = kUndecided;
    members_.resize(old_size);
    gens_.pop_back();
  }

  const AutGroup& a_;
  const FiniteGroup& g_;
  std::size_t n_;
  const Candidates& cands_;
  std::vector<AutIndex> lam_;
  std::vector<Element> members_;
  std::vector<Element> gens_;
};

std::vector<LambdaFunction> run_search(const AutGroup& a, const Candidates& cands,
                                       unsigned threads) {
  const std::size_t n = a.group().order();
  if (n == 1) return {translation_transversal(a)};

  // Cell 1 is the first undecided cell; split the search on its value.
  const auto& first = cands[1];
  std::vector<std::vector<LambdaFunction>> parts(first.size());
  detail::parallel_for(first.size(), threads, [&](std::size_t i) {
    TransversalSearch search(a, cands);
    if (search.push(1, first[i])) search.run(2, parts[i]);
  });

  std::vector<LambdaFunction> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::size_t index_in(std::span<const LambdaFunction> sorted, const LambdaFunction& lam) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), lam);
  if (it == sorted.end() || *it != lam) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

// Sorted distinct images of lam under every automorphism.
std::vector<LambdaFunction> aut_orbit(const AutGroup& a, const LambdaFunction& lam) {
  std::vector<LambdaFunction> orbit;
  orbit.reserve(a.size());
  for (AutIndex beta = 0; beta < a.size(); ++beta) orbit.push_back(act_by_automorphism(a, lam, beta));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace

bool satisfies_closure(const AutGroup& a, const LambdaFunction& lam) {
  const FiniteGroup& g = a.group();
  const std::size_t n = g.order();
  if (lam.size() != n || lam[0] != a.identity()) return false;
  for (AutIndex v : lam.values) {
    if (v >= a.size()) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element c = g.mul(x, a.apply(lam[x], y));
      if (a.mul(lam[x], lam[y]) != lam[c]) return false;
    }
  }
  return true;
}

LambdaFunction translation_transversal(const AutGroup& a) {
  return LambdaFunction{std::vector<AutIndex>(a.group().order(), a.identity())};
}

std::vector<HolElement> subgroup_of(const LambdaFunction& lam) {
  std::vector<HolElement> out;
  out.reserve(lam.size());
  for (Element x = 0; x < lam.size(); ++x) out.push_back({lam[x], x});
  return out;
}

LambdaFunction transversal_of(const AutGroup& a, std::span<const HolElement> sub) {
  const std::size_t n = a.group().order();
  LambdaFunction lam{std::vector<AutIndex>(n, kUndecided)};
  if (sub.size() != n) throw NotASubgroup("set size differs from |G|");
  for (const auto& x : sub) {
    if (lam.values[x.g] != kUndecided) throw NotASubgroup("repeated second coordinate");
    lam.values[x.g] = x.aut;
  }
  return lam;
}

bool is_regular(const AutGroup& a, std::span<const HolElement> sub) {
  const std::size_t n = a.group().order();
  const std::set<HolElement> members(sub.begin(), sub.end());
  const HolElement id{a.identity(), 0};
  if (!members.count(id)) throw NotASubgroup("identity missing");
  for (const auto& x : members) {
    for (const auto& y : members) {
      if (!members.count(hol_product(a, x, y))) throw NotASubgroup("not closed under product");
    }
  }
  // The orbit of 0 is the set of second coordinates.
  std::set<Element> orbit0;
  for (const auto& x : members) orbit0.insert(hol_action(a, x, 0));
  const bool transitive = orbit0.size() == n;
  bool free = true;
  for (const auto& x : members) {
    if (x == id) continue;
    for (Element g = 0; g < n && free; ++g) free = hol_action(a, x, g) != g;
  }
  return transitive && free;
}

std::vector<LambdaFunction> enumerate_transversals(const AutGroup& a, unsigned threads) {
  const auto cands = semiregular_candidates(a);
  return run_search(a, cands, threads);
}

LambdaFunction conjugate_transversal(const AutGroup& a, const LambdaFunction& lam, HolElement x) {
  std::vector<HolElement> conj;
  conj.reserve(lam.size());
  for (Element c = 0; c < lam.size(); ++c) conj.push_back(hol_conjugate(a, {lam[c], c}, x));
  return transversal_of(a, conj);
}

LambdaFunction act_by_automorphism(const AutGroup& a, const LambdaFunction& lam, AutIndex beta) {
  const std::size_t n = lam.size();
  const AutIndex binv = a.inverse(beta);
  LambdaFunction out{std::vector<AutIndex>(n)};
  for (Element x = 0; x < n; ++x) {
    out.values[x] = a.mul(a.mul(binv, lam[a.apply(beta, x)]), beta);
  }
  return out;
}

std::vector<RegularClass> aut_orbit_classes(const AutGroup& a, std::span<const LambdaFunction> all) {
  std::vector<RegularClass> out;
  std::vector<char> visited(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (visited[i]) continue;
    const auto orbit = aut_orbit(a, all[i]);
    for (const auto& lam : orbit) {
      const std::size_t j = index_in(all, lam);
      if (j == all.size()) {
        throw std::invalid_argument("lambda list is not closed under the Aut(G) action");
      }
      visited[j] = 1;
    }
    out.push_back({orbit.front(), orbit.size()});
  }
  return out;
}

SylowEnumeration enumerate_via_sylow(const AutGroup& a, unsigned threads) {
  const std::size_t n = a.group().order();
  const auto primes = factorize(n);
  if (primes.size() != 1) throw NotAPGroup("order " + std::to_string(n) + " is not a prime power");

  const PermGroup hol = hol_as_perm_group(a);
  PermGroup sylow = sylow_subgroup(hol, primes[0].first);
  const StabChain chain(sylow);

  auto cands = semiregular_candidates(a);
  for (Element cell = 1; cell < n; ++cell) {
    std::erase_if(cands[cell], [&](AutIndex alpha) {
      return !chain.contains(action_perm(a, {alpha, cell}));
    });
  }
  auto inside = run_search(a, cands, threads);

  std::vector<char> covered(inside.size(), 0);
  std::vector<RegularClass> classes;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (covered[i]) continue;
    const auto orbit = aut_orbit(a, inside[i]);
    for (const auto& lam : orbit) {
      const std::size_t j = index_in(inside, lam);
      if (j < inside.size()) covered[j] = 1;
    }
    classes.push_back({orbit.front(), orbit.size()});
  }
  std::sort(classes.begin(), classes.end());
  return {std::move(sylow), chain.order(), std::move(inside), std::move(classes)};
}

ConjugacyEnumeration enumerate_via_subgroup_conjugacy(const AutGroup& a, std::size_t cap) {
  const std::size_t n = a.group().order();
  const std::size_t hol_size = hol_order(a);
  if (hol_size > cap) throw HolTooLarge(hol_size, cap);

  const PermGroup hol = hol_as_perm_group(a);
  const std::vector<Perm> elems = StabChain(hol).elements();
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::uint32_t id = index.at(Perm::identity(n));
  auto product = [&](std::uint32_t x, std::uint32_t y) { return index.at(compose(elems[x], elems[y])); };

  // Subgroups as sorted element-index lists.  Every subgroup of a group of
  // order n has order dividing n, so larger closures are abandoned.
  using Subgroup = std::vector<std::uint32_t>;
  auto closure = [&](const Subgroup& base, std::uint32_t x) -> std::optional<Subgroup> {
    std::vector<char> in(elems.size(), 0);
    std::vector<std::uint32_t> members(base.begin(), base.end());
    for (auto m : members) in[m] = 1;
    // <base, x> is generated by x and the elements of base.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::uint32_t s : base) {
        const std::uint32_t y = product(members[i], s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          if (members.size() > n) return std::nullopt;
        }
      }
      const std::uint32_t y = product(members[i], x);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        if (members.size() > n) return std::nullopt;
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::set<Subgroup> seen;
  std::vector<Subgroup> order_n;
  std::vector<Subgroup> stack{{id}};
  seen.insert(stack.back());
  if (n == 1) order_n.push_back(stack.back());
  while (!stack.empty()) {
    const Subgroup h = std::move(stack.back());
    stack.pop_back();
    std::vector<char> in(elems.size(), 0);
    for (auto m : h) in[m] = 1;
    for (std::uint32_t x = 0; x < elems.size(); ++x) {
      if (in[x]) continue;
      auto next = closure(h, x);
      if (!next || n % next->size() != 0) continue;
      if (!seen.insert(*next).second) continue;
      if (next->size() == n) {
        order_n.push_back(std::move(*next));
      } else {
        stack.push_back(std::move(*next));
      }
    }
  }

  std::vector<Subgroup> regular;
  for (const auto& k : order_n) {
    // n elements; transitive iff the images of 0 are distinct, free iff no
    // non-identity element fixes a point.
    std::vector<char> hit(n, 0);
    bool ok = true;
    for (auto m : k) {
      const Point img = elems[m][0];
      if (hit[img]) ok = false;
      hit[img] = 1;
      if (m != id) {
        for (Point p = 0; p < n && ok; ++p) ok = elems[m][p] != p;
      }
      if (!ok) break;
    }
    if (ok) regular.push_back(k);
  }
  std::sort(regular.begin(), regular.end());

  std::map<Subgroup, std::size_t> class_of;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t r = 0; r < regular.size(); ++r) {
    if (class_of.count(regular[r])) continue;
    const std::size_t cls = members.size();
    members.emplace_back();
    for (std::uint32_t x = 0; x < elems.size(); ++x) {
      const Perm xinv = elems[x].inverse();
      Subgroup conj;
      conj.reserve(n);
      for (auto m : regular[r]) conj.push_back(index.at(compose(compose(xinv, elems[m]), elems[x])));
      std::sort(conj.begin(), conj.end());
      if (class_of.emplace(conj, cls).second) {
        members[cls].push_back(static_cast<std::size_t>(
            std::lower_bound(regular.begin(), regular.end(), conj) - regular.begin()));
      }
    }
  }

  std::vector<RegularClass> classes;
  for (const auto& cls : members) {
    std::vector<LambdaFunction> lams;
    for (std::size_t r : cls) {
      std::vector<HolElement> sub;
      for (auto m : regular[r]) sub.push_back(*hol_element_of(a, elems[m]));
      lams.push_back(transversal_of(a, sub));
    }
    classes.push_back({*std::min_element(lams.begin(), lams.end()), cls.size()});
  }
  std::sort(classes.begin(), classes.end());
  return {order_n.size(), regular.size(), std::move(classes)};
}

}  // namespace skewbrace
