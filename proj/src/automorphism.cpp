#include "skewbrace/automorphism.hpp"

#include <algorithm>

#include "skewbrace/error.hpp"

namespace skewbrace {

namespace {

constexpr std::uint64_t kDenseIndexLimit = std::uint64_t{1} << 21;
constexpr std::size_t kMulTableLimit = 2048;

}  // namespace

AutGroup AutGroup::compute(const FiniteGroup& g, std::size_t cap) {
  std::vector<std::vector<Element>> found;
  bool too_large = false;
  for_each_isomorphism(g, g, [&](std::span<const Element> phi) {
    if (found.size() == cap) {
      too_large = true;
      return false;
    }
    found.emplace_back(phi.begin(), phi.end());
    return true;
  });
  if (too_large) throw AutTooLarge(cap);
  std::sort(found.begin(), found.end());
  return AutGroup(g, std::move(found));
}

AutGroup::AutGroup(FiniteGroup g, std::vector<std::vector<Element>> sorted)
    : group_(std::move(g)),
      n_(group_.order()),
      count_(sorted.size()),
      gens_(generating_set(group_)),
      perms_(n_, {}) {
  images_.reserve(count_ * n_);
  for (const auto& img : sorted) images_.insert(images_.end(), img.begin(), img.end());

  std::uint64_t span = 1;
  bool dense = true;
  for (std::size_t t = 0; t < gens_.size() && dense; ++t) {
    span *= n_;
    dense = span <= kDenseIndexLimit;
  }
  if (dense) dense_.assign(span, 0);
  for (AutIndex a = 0; a < count_; ++a) {
    std::uint64_t code = 0;
    for (std::size_t t = gens_.size(); t-- > 0;) code = code * n_ + apply(a, gens_[t]);
    if (dense) {
      dense_[code] = a;
    } else {
      sparse_.emplace(code, a);
    }
  }

  inverse_.resize(count_);
  std::vector<Element> inv(n_);
  for (AutIndex a = 0; a < count_; ++a) {
    for (Element x = 0; x < n_; ++x) inv[apply(a, x)] = x;
    inverse_[a] = *index_of(inv);
  }

  if (count_ <= kMulTableLimit) {
    std::vector<AutIndex> table(count_ * count_);
    for (AutIndex a = 0; a < count_; ++a) {
      for (AutIndex b = 0; b < count_; ++b) table[a * count_ + b] = mul(a, b);
    }
    mul_table_ = std::move(table);
  }

  std::vector<Perm> gens;
  StabChain chain(PermGroup(n_, gens));
  for (AutIndex a = 1; a < count_ && chain.order() < count_; ++a) {
    Perm p = element(a);
    if (chain.contains(p)) continue;
    gens.push_back(std::move(p));
    chain = StabChain(PermGroup(n_, gens));
  }
  perms_ = PermGroup(n_, std::move(gens));
}

Perm AutGroup::element(AutIndex alpha) const {
  auto img = images(alpha);
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

std::optional<AutIndex> AutGroup::index_of(std::span<const Element> images) const {
  if (images.size() != n_) return std::nullopt;
  std::uint64_t code = 0;
  for (std::size_t t = gens_.size(); t-- > 0;) code = code * n_ + images[gens_[t]];
  AutIndex a;
  if (!dense_.empty()) {
    if (code >= dense_.size()) return std::nullopt;
    a = dense_[code];
  } else {
    auto it = sparse_.find(code);
    if (it == sparse_.end()) return std::nullopt;
    a = it->second;
  }
  if (!std::equal(images.begin(), images.end(), this->images(a).begin())) return std::nullopt;
  return a;
}

bool is_automorphism(const FiniteGroup& g, const Perm& p) {
  const std::size_t n = g.order();
  if (p.degree() != n) return false;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (p[g.mul(a, b)] != g.mul(p[a], p[b])) return false;
    }
  }
  return true;
}

}  // namespace skewbrace
