#include "skewbrace/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewbrace {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  return Perm(Trusted{}, std::move(id));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Perm(Trusted{}, std::move(inv));
}

std::size_t Perm::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Perm::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Perm(Perm::Trusted{}, std::move(out));
}

Perm power(const Perm& p, std::size_t k) {
  Perm result = Perm::identity(p.degree());
  Perm base = p;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

Perm conjugate(const Perm& p, const Perm& x) { return compose(compose(x.inverse(), p), x); }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) h = (h ^ x) * 1099511628211ULL;
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  }
}

StabChain::StabChain(const PermGroup& group) : degree_(group.degree()) {
  for (const auto& g : group.generators()) {
    if (!g.is_identity()) add_strong_generator(g);
  }
  for (std::size_t k = 0; k < base_.size(); ++k) rebuild_level(k);

  // Check Schreier generators from the deepest level up.  A failed sift adds
  // a strong generator and resumes at the level where it stopped.
  std::size_t k = levels_.size();
  while (k > 0) {
    --k;
    bool added = false;
    for (std::size_t oi = 0; oi < levels_[k].orbit.size() && !added; ++oi) {
      for (std::size_t si = 0; si < levels_[k].generators.size() && !added; ++si) {
        const Level& lv = levels_[k];
        const Point p = lv.orbit[oi];
        const Perm& s = lv.generators[si];
        Perm schreier = compose(compose(*lv.transversal[p], s), *lv.inverse_transversal[s[p]]);
        if (schreier.is_identity()) continue;
        auto [h, stop] = sift(std::move(schreier), k + 1);
        if (h.is_identity()) continue;
        add_strong_generator(h);
        for (std::size_t j = 0; j < base_.size() && j <= stop; ++j) rebuild_level(j);
        k = stop + 1;
        added = true;
      }
    }
  }
}

void StabChain::add_strong_generator(const Perm& g) {
  bool fixes_base = true;
  for (Point b : base_) fixes_base = fixes_base && g[b] == b;
  if (fixes_base) base_.push_back(g.first_moved_point());
  strong_.push_back(g);
}

void StabChain::rebuild_level(std::size_t k) {
  if (levels_.size() < base_.size()) levels_.resize(base_.size());
  Level& lv = levels_[k];
  lv.base = base_[k];
  lv.generators.clear();
  for (const auto& g : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < k && fixes; ++j) fixes = g[base_[j]] == base_[j];
    if (fixes) lv.generators.push_back(g);
  }
  lv.orbit.assign(1, lv.base);
  lv.transversal.assign(degree_, std::nullopt);
  lv.inverse_transversal.assign(degree_, std::nullopt);
  lv.transversal[lv.base] = Perm::identity(degree_);
  lv.inverse_transversal[lv.base] = Perm::identity(degree_);
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    const Point p = lv.orbit[oi];
    for (const auto& s : lv.generators) {
      const Point q = s[p];
      if (lv.transversal[q]) continue;
      lv.transversal[q] = compose(*lv.transversal[p], s);
      lv.inverse_transversal[q] = lv.transversal[q]->inverse();
      lv.orbit.push_back(q);
    }
  }
}

std::pair<Perm, std::size_t> StabChain::sift(Perm p, std::size_t start) const {
  for (std::size_t li = start; li < levels_.size(); ++li) {
    const Level& lv = levels_[li];
    const Point x = p[lv.base];
    if (!lv.inverse_transversal[x]) return {std::move(p), li};
    p = compose(p, *lv.inverse_transversal[x]);
  }
  return {std::move(p), levels_.size()};
}

std::uint64_t StabChain::order() const noexcept {
  std::uint64_t ord = 1;
  for (const auto& lv : levels_) ord *= lv.orbit.size();
  return ord;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

bool StabChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).first.is_identity();
}

bool StabChain::for_each_element(const std::function<bool(const Perm&)>& visit) const {
  // Every element is uniquely u_{L-1} * ... * u_0 with u_i in the i-th transversal.
  std::function<bool(std::size_t, const Perm&)> rec = [&](std::size_t depth,
                                                          const Perm& prefix) -> bool {
    if (depth == 0) return visit(prefix);
    const Level& lv = levels_[depth - 1];
    for (Point x : lv.orbit) {
      if (rec(depth - 1, compose(prefix, *lv.transversal[x]))) return true;
    }
    return false;
  };
  return rec(levels_.size(), Perm::identity(degree_));
}

std::vector<Perm> StabChain::elements() const {
  std::vector<Perm> out;
  out.reserve(order());
  for_each_element([&](const Perm& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

StabChain build_stab_chain(const PermGroup& group) { return StabChain(group); }

bool contains(const StabChain& chain, const Perm& p) { return chain.contains(p); }

std::vector<Point> orbit(std::span<const Perm> gens, Point x) {
  if (gens.empty()) return {x};
  std::vector<char> seen(gens.front().degree(), 0);
  std::vector<Point> out{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

PermGroup sylow_subgroup(const PermGroup& group, std::size_t p) {
  const StabChain chain(group);
  std::uint64_t target = 1;
  for (std::uint64_t rest = chain.order(); rest % p == 0; rest /= p) target *= p;
  if (target == 1) throw std::invalid_argument("prime does not divide the group order");

  std::vector<Perm> gens;
  StabChain sub(PermGroup(group.degree(), gens));
  while (sub.order() < target) {
    std::optional<Perm> found;
    chain.for_each_element([&](const Perm& x) {
      if (sub.contains(x)) return false;
      if (!sub.contains(power(x, p))) return false;
      const Perm xinv = x.inverse();
      for (const auto& s : gens) {
        if (!sub.contains(compose(compose(xinv, s), x))) return false;
      }
      found = x;
      return true;
    });
    if (!found) throw std::logic_error("no p-element normalizing the current p-subgroup");
    gens.push_back(std::move(*found));
    sub = StabChain(PermGroup(group.degree(), gens));
  }
  return PermGroup(group.degree(), std::move(gens));
}

}  // namespace skewbrace
