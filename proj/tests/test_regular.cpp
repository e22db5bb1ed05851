#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/regular.hpp"

using namespace skewbrace;

namespace {

// Every map G -> Aut(G) with lam_0 = id that satisfies the closure identity,
// by exhaustive assignment.
std::vector<LambdaFunction> brute_force_transversals(const AutGroup& a) {
  const std::size_t n = a.group().order();
  LambdaFunction lam{std::vector<AutIndex>(n, a.identity())};
  std::vector<LambdaFunction> out;
  while (true) {
    if (satisfies_closure(a, lam)) out.push_back(lam);
    std::size_t k = 1;
    while (k < n && ++lam.values[k] == a.size()) lam.values[k++] = 0;
    if (k >= n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t class_total(const std::vector<FiniteGroup>& groups) {
  std::size_t total = 0;
  for (const auto& g : groups) {
    const AutGroup a = AutGroup::compute(g);
    total += aut_orbit_classes(a, enumerate_transversals(a)).size();
  }
  return total;
}

}  // namespace

TEST_CASE("translation transversal") {
  for (const auto& g : {cyclic_group(1), cyclic_group(3), testing::symmetric3(), testing::dihedral(5)}) {
    const AutGroup a = AutGroup::compute(g);
    const auto t = translation_transversal(a);
    CHECK(satisfies_closure(a, t));
    const auto all = enumerate_transversals(a);
    CHECK(std::binary_search(all.begin(), all.end(), t));
    const auto sub = subgroup_of(t);
    CHECK(is_regular(a, sub));
    CHECK(transversal_of(a, sub) == t);
  }
}

TEST_CASE("Z/3 has exactly one regular subgroup") {
  const AutGroup a = AutGroup::compute(cyclic_group(3));
  const auto all = enumerate_transversals(a);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == translation_transversal(a));
}

TEST_CASE("enumeration matches exhaustive assignment") {
  std::vector<FiniteGroup> groups = {cyclic_group(2), cyclic_group(4),
                                     direct_product(cyclic_group(2), cyclic_group(2)),
                                     cyclic_group(5), cyclic_group(6), testing::symmetric3(),
                                     cyclic_group(7), cyclic_group(8), testing::dihedral(4),
                                     cyclic_group(9), cyclic_group(10)};
  for (const auto& g : groups) {
    const AutGroup a = AutGroup::compute(g);
    const auto all = enumerate_transversals(a);
    CHECK_MESSAGE(all == brute_force_transversals(a), g.label());
  }
}

TEST_CASE("every enumerated lambda is a regular subgroup") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& g : enumerate_groups_of_order(n)) {
      const AutGroup a = AutGroup::compute(g);
      const auto all = enumerate_transversals(a);
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      for (const auto& lam : all) {
        REQUIRE(satisfies_closure(a, lam));
        const auto sub = subgroup_of(lam);
        std::set<Element> seconds;
        for (const auto& x : sub) seconds.insert(x.g);
        CHECK(seconds.size() == n);
        CHECK(is_regular(a, sub));
      }
    }
  }
}

TEST_CASE("is_regular") {
  const auto g = testing::dihedral(4);
  const AutGroup a = AutGroup::compute(g);
  std::vector<HolElement> aut_copy;
  for (AutIndex x = 0; x < a.size(); ++x) aut_copy.push_back({x, 0});
  CHECK_FALSE(is_regular(a, aut_copy));

  std::vector<HolElement> not_closed = {{a.identity(), 0}, {a.identity(), 1}};
  CHECK_THROWS_AS(is_regular(a, not_closed), NotASubgroup);

  const auto all = enumerate_transversals(a);
  for (const auto& lam : all) {
    for (const HolElement x : {HolElement{3, 5}, HolElement{6, 2}, HolElement{1, 7}}) {
      const auto c = conjugate_transversal(a, lam, x);
      CHECK(satisfies_closure(a, c));
      CHECK(is_regular(a, subgroup_of(c)));
    }
  }
}

TEST_CASE("transversal_of rejects non-transversals") {
  const AutGroup a = AutGroup::compute(cyclic_group(3));
  const std::vector<HolElement> twice = {{0, 0}, {0, 1}, {0, 1}};
  CHECK_THROWS_AS(transversal_of(a, twice), NotASubgroup);
  const std::vector<HolElement> short_set = {{0, 0}};
  CHECK_THROWS_AS(transversal_of(a, short_set), NotASubgroup);
}

TEST_CASE("closure identity rejects broken lambdas") {
  const AutGroup a = AutGroup::compute(cyclic_group(4));
  LambdaFunction lam = translation_transversal(a);
  lam.values[1] = 1;  // inversion at 1 only
  CHECK_FALSE(satisfies_closure(a, lam));
  LambdaFunction bad0 = translation_transversal(a);
  bad0.values[0] = 1;
  CHECK_FALSE(satisfies_closure(a, bad0));
}

TEST_CASE("automorphism action equals conjugation by (beta, 0)") {
  const AutGroup a = AutGroup::compute(testing::dihedral(6));
  const auto all = enumerate_transversals(a);
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (AutIndex beta = 0; beta < a.size(); ++beta) {
      CHECK(act_by_automorphism(a, all[i], beta) == conjugate_transversal(a, all[i], {beta, 0}));
    }
  }
}

TEST_CASE("Aut-orbit classes") {
  const AutGroup a = AutGroup::compute(cyclic_group(8));
  const std::vector<LambdaFunction> single = {translation_transversal(a)};
  const auto one = aut_orbit_classes(a, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].orbit_size == 1);

  for (const auto& g : {testing::dihedral(4), direct_product(cyclic_group(2), cyclic_group(4)),
                        testing::dihedral(6)}) {
    const AutGroup b = AutGroup::compute(g);
    const auto all = enumerate_transversals(b);
    const auto classes = aut_orbit_classes(b, all);
    std::size_t sum = 0;
    for (const auto& c : classes) {
      sum += c.orbit_size;
      CHECK(b.size() % c.orbit_size == 0);
      for (AutIndex beta = 0; beta < b.size(); ++beta) {
        CHECK_FALSE(act_by_automorphism(b, c.rep, beta) < c.rep);
      }
    }
    CHECK(sum == all.size());
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    const auto translation = std::find_if(classes.begin(), classes.end(), [&](const RegularClass& c) {
      return c.rep == translation_transversal(b);
    });
    REQUIRE(translation != classes.end());
    CHECK(translation->orbit_size == 1);
  }
}

TEST_CASE("class totals for orders 4 and 9") {
  CHECK(class_total({cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))}) == 4);
  CHECK(class_total({cyclic_group(9), direct_product(cyclic_group(3), cyclic_group(3))}) == 4);
}

TEST_CASE("thread count does not change the output") {
  for (const auto& g : {testing::dihedral(4), abelian_group(std::vector<std::size_t>{2, 2, 2}),
                        testing::dihedral(6)}) {
    const AutGroup a = AutGroup::compute(g);
    const auto serial = enumerate_transversals(a, 1);
    CHECK(enumerate_transversals(a, 4) == serial);
    CHECK(enumerate_transversals(a, 3) == serial);
    CHECK(enumerate_transversals(a, 1) == serial);
  }
}

TEST_CASE("Sylow-restricted enumeration") {
  for (const auto& g : {cyclic_group(9), direct_product(cyclic_group(2), cyclic_group(2)),
                        cyclic_group(8), testing::dihedral(4),
                        abelian_group(std::vector<std::size_t>{2, 2, 2})}) {
    const AutGroup a = AutGroup::compute(g);
    const auto full = aut_orbit_classes(a, enumerate_transversals(a));
    const auto syl = enumerate_via_sylow(a);
    CHECK_MESSAGE(syl.classes == full, g.label());
    const StabChain chain(syl.sylow);
    for (const auto& lam : syl.inside) {
      for (Element x = 0; x < g.order(); ++x) CHECK(chain.contains(action_perm(a, {lam[x], x})));
    }
  }
  // Hol(Z/8) has order 32, so it is its own Sylow 2-subgroup.
  const AutGroup a8 = AutGroup::compute(cyclic_group(8));
  const auto syl8 = enumerate_via_sylow(a8);
  CHECK(syl8.sylow_order == 32);
  CHECK(syl8.inside == enumerate_transversals(a8));

  CHECK_THROWS_AS(enumerate_via_sylow(AutGroup::compute(cyclic_group(6))), NotAPGroup);
}

TEST_CASE("subgroup conjugacy strategy") {
  CHECK(classes_via_subgroup_conjugacy(AutGroup::compute(cyclic_group(3))).size() == 1);
  CHECK(classes_via_subgroup_conjugacy(AutGroup::compute(cyclic_group(5))).size() == 1);
  CHECK(classes_via_subgroup_conjugacy(AutGroup::compute(FiniteGroup())).size() == 1);
  for (const auto& g : {direct_product(cyclic_group(2), cyclic_group(2)), testing::symmetric3(),
                        testing::dihedral(4)}) {
    const AutGroup a = AutGroup::compute(g);
    const auto all = enumerate_transversals(a);
    const auto conj = enumerate_via_subgroup_conjugacy(a);
    CHECK(conj.regular_count == all.size());
    CHECK(conj.classes == aut_orbit_classes(a, all));
  }
  const AutGroup big = AutGroup::compute(abelian_group(std::vector<std::size_t>{2, 2, 2, 2}));
  CHECK_THROWS_AS(enumerate_via_subgroup_conjugacy(big), HolTooLarge);
}
