#pragma once

// Permutations of {0, ..., d-1} and the permutation-group machinery used by
// the enumeration pipeline.
//
// Composition convention: compose(p, q) applies p first, then q, so
// compose(p, q)[i] == q[p[i]].  Every product in this module follows it.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace skewbrace {

using Point = std::uint32_t;

class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  std::size_t order() const;
  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const noexcept;

  auto operator<=>(const Perm&) const = default;

 private:
  struct Trusted {};
  Perm(Trusted, std::vector<Point> images) : images_(std::move(images)) {}
  friend Perm compose(const Perm&, const Perm&);

  std::vector<Point> images_;
};

/// p then q.  Throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& p, const Perm& q);
Perm power(const Perm& p, std::size_t k);
/// x^-1 p x (conjugation convention g^h = h^-1 g h).
Perm conjugate(const Perm& p, const Perm& x);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
};

/// Stabilizer chain built by the deterministic Schreier-Sims algorithm.
/// Base points are taken as the smallest points moved by the generator that
/// opens each level.
class StabChain {
 public:
  struct Level {
    Point base;
    std::vector<Perm> generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Perm>> transversal;          // base -> point
    std::vector<std::optional<Perm>> inverse_transversal;  // point -> base
  };

  explicit StabChain(const PermGroup& group);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept;
  std::vector<Point> base() const;
  const std::vector<Level>& levels() const noexcept { return levels_; }

  bool contains(const Perm& p) const;
  /// Residue after sifting from `start`, and the level where sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t start = 0) const;

  /// Visits every group element exactly once; stops when `visit` returns true.
  /// Returns true if stopped early.
  bool for_each_element(const std::function<bool(const Perm&)>& visit) const;
  std::vector<Perm> elements() const;

 private:
  void add_strong_generator(const Perm& g);
  void rebuild_level(std::size_t k);

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

StabChain build_stab_chain(const PermGroup& group);
bool contains(const StabChain& chain, const Perm& p);

/// The orbit of x under <gens>, in breadth-first order.
std::vector<Point> orbit(std::span<const Perm> gens, Point x);

/// A Sylow p-subgroup.  Grows a p-subgroup S one step at a time by an
/// element x with x in N(S) \ S and x^p in S, scanning the group elements in
/// chain order.  Throws std::invalid_argument if p does not divide |group|.
PermGroup sylow_subgroup(const PermGroup& group, std::size_t p);

}  // namespace skewbrace
