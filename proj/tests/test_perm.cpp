#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skewbrace/automorphism.hpp"
#include "skewbrace/holomorph.hpp"
#include "skewbrace/perm.hpp"

using namespace skewbrace;

namespace {

Perm cycle(std::size_t degree, std::vector<Point> pts) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  return Perm(img);
}

bool is_odd(const Perm& p) {
  std::size_t transpositions = 0;
  std::vector<char> seen(p.degree());
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

}  // namespace

TEST_CASE("Perm validation and composition") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3}), std::invalid_argument);
  const Perm p = cycle(4, {0, 2, 3});
  CHECK(compose(p, Perm::identity(4)) == p);
  CHECK(compose(Perm::identity(4), p) == p);
  const Perm t = cycle(2, {0, 1});
  CHECK(compose(t, t).is_identity());
  // Left factor first: (0 1 2) then (0 1) is (1 2).
  CHECK(compose(cycle(3, {0, 1, 2}), cycle(3, {0, 1})) == cycle(3, {1, 2}));
  CHECK_THROWS_AS(compose(t, p), std::invalid_argument);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(power(p, 3).is_identity());
  CHECK(p.first_moved_point() == 0);
  const Perm x = cycle(4, {1, 3});
  CHECK(conjugate(p, x) == compose(compose(x.inverse(), p), x));
}

TEST_CASE("stabilizer chain orders") {
  const PermGroup s4(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  CHECK(StabChain(s4).order() == 24);
  CHECK(StabChain(PermGroup(5, {cycle(5, {0, 1, 2, 3, 4})})).order() == 5);

  const AutGroup a = AutGroup::compute(cyclic_group(5));
  const PermGroup hol = hol_as_perm_group(a);
  CHECK(StabChain(hol).order() == 20);
  CHECK(StabChain(hol).elements().size() == 20);
}

TEST_CASE("chain order matches closure") {
  std::vector<PermGroup> groups = {
      PermGroup(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4}), cycle(6, {1, 5})}),
      PermGroup(7, {cycle(7, {0, 1, 2, 3, 4, 5, 6}), cycle(7, {1, 2, 4})}),
      PermGroup(8, {cycle(8, {0, 1, 2, 3}), cycle(8, {4, 5, 6, 7}), cycle(8, {0, 4})}),
      PermGroup(8, {cycle(8, {0, 1}), cycle(8, {2, 3}), cycle(8, {4, 5})}),
      PermGroup(5, {cycle(5, {0, 1, 2}), cycle(5, {2, 3, 4})}),
  };
  for (const auto& g : {6u, 8u, 9u, 10u, 12u}) {
    const AutGroup a = AutGroup::compute(cyclic_group(g));
    groups.push_back(hol_as_perm_group(a));
  }
  groups.push_back(hol_as_perm_group(AutGroup::compute(testing::dihedral(4))));
  for (const auto& g : groups) {
    const StabChain chain(g);
    const auto all = testing::closure(g.generators(), g.degree());
    CHECK(chain.order() == all.size());
    auto listed = chain.elements();
    std::sort(listed.begin(), listed.end());
    CHECK(listed == all);
    for (const auto& x : all) CHECK(chain.contains(x));
    std::size_t prod = 1;
    for (const auto& level : chain.levels()) prod *= level.orbit.size();
    CHECK(prod == chain.order());
  }
}

TEST_CASE("membership") {
  const PermGroup a5(5, {cycle(5, {0, 1, 2}), cycle(5, {2, 3, 4})});
  const StabChain chain(a5);
  CHECK(chain.order() == 60);
  CHECK(chain.contains(Perm::identity(5)));
  CHECK(contains(chain, Perm::identity(5)));
  CHECK_FALSE(chain.contains(cycle(5, {0, 1})));

  std::mt19937 rng(7);
  const auto& gens = a5.generators();
  for (int trial = 0; trial < 20; ++trial) {
    Perm p = Perm::identity(5);
    for (int k = 0; k < 10; ++k) p = compose(p, gens[rng() % gens.size()]);
    CHECK(chain.contains(p));
    CHECK_FALSE(is_odd(p));
  }
}

TEST_CASE("orbits") {
  const Perm id = Perm::identity(5);
  CHECK(orbit(std::vector<Perm>{id}, 3) == std::vector<Point>{3});
  CHECK(orbit(std::vector<Perm>{cycle(5, {0, 1, 2, 3, 4})}, 2).size() == 5);
  const AutGroup a = AutGroup::compute(cyclic_group(6));
  const PermGroup hol = hol_as_perm_group(a);
  CHECK(orbit(hol.generators(), 0).size() == 6);
}

TEST_CASE("Sylow subgroups") {
  auto p_part = [](std::uint64_t n, std::size_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  };

  const PermGroup s3(3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})});
  CHECK(StabChain(sylow_subgroup(s3, 3)).order() == 3);
  CHECK(StabChain(sylow_subgroup(s3, 2)).order() == 2);
  CHECK_THROWS_AS(sylow_subgroup(s3, 5), std::invalid_argument);

  // A p-group is its own Sylow subgroup.
  const PermGroup c8(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})});
  CHECK(StabChain(sylow_subgroup(c8, 2)).order() == 8);

  const PermGroup hol9 = hol_as_perm_group(AutGroup::compute(cyclic_group(9)));
  CHECK(StabChain(hol9).order() == 54);
  CHECK(StabChain(sylow_subgroup(hol9, 3)).order() == 27);

  const PermGroup s5(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})});
  for (std::size_t p : {2u, 3u, 5u}) {
    const PermGroup s = sylow_subgroup(s5, p);
    const StabChain chain(s);
    CHECK(chain.order() == p_part(120, p));
    const StabChain big(s5);
    for (const auto& g : s.generators()) {
      CHECK(big.contains(g));
      CHECK(p_part(g.order(), p) == g.order());
    }
  }

  for (const auto& g : {testing::dihedral(6), cyclic_group(12), cyclic_group(16)}) {
    const PermGroup hol = hol_as_perm_group(AutGroup::compute(g));
    const std::uint64_t order = StabChain(hol).order();
    for (const auto& [p, e] : factorize(order)) {
      CHECK(StabChain(sylow_subgroup(hol, p)).order() == p_part(order, p));
    }
  }
}
