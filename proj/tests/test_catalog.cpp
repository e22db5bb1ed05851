#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/error.hpp"

using namespace skewbrace;

namespace {

const char* kOrder4 = R"(# the two groups of order 4
group 4 4/1
table
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
end

group 4 4/2
table
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0
end
)";

CatalogError::Kind catalog_error(const std::string& text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError& e) {
    return e.kind();
  }
  FAIL("expected CatalogError");
  return CatalogError::Kind::Parse;
}

std::string catalog_error_text(const std::string& text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the order-4 catalog") {
  const auto cat = parse_catalog(kOrder4);
  CHECK(cat.entries(4).size() == 2);
  CHECK(cat.complete(4));
  CHECK(cat.orders() == std::vector<std::size_t>{4});
  REQUIRE(cat.find("4/2") != nullptr);
  CHECK(cat.find("4/2")->label() == "4/2");
  CHECK(groups_of_order(4, cat).size() == 2);
}

TEST_CASE("catalog parse errors") {
  using K = CatalogError::Kind;
  // Non-associative latin square with identity 0.
  CHECK(catalog_error("group 5 5/x\ntable\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\nend\n") ==
        K::InvalidGroup);
  const std::string z6 = "group 6 6/a\ntable\n" + [] {
    std::string rows;
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) rows += std::to_string((a + b) % 6) + (b < 5 ? " " : "\n");
    }
    return rows;
  }() + "end\n";
  // Z/2 x Z/3 with (a, h) encoded as 3a + h.
  std::string z2z3 = "group 6 6/b\ntable\n";
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      z2z3 += std::to_string(((x / 3 + y / 3) % 2) * 3 + (x % 3 + y % 3) % 3) + (y < 5 ? " " : "\n");
    }
  }
  z2z3 += "end\n";
  CHECK(parse_catalog(z6).entries(6).size() == 1);
  CHECK(catalog_error(z6 + z2z3) == K::DuplicateIsoType);

  CHECK(catalog_error("grop 2 2/a\n") == K::Parse);
  CHECK(catalog_error("group 2 2/a\n0 1\n") == K::Parse);
  CHECK(catalog_error("group 2 2/a\ntable\n0 1\n1\nend\n") == K::Parse);
  CHECK(catalog_error("group 2 2/a\ntable\n0 1\n1 0\n") == K::Parse);
  CHECK(catalog_error("group 2 2/a\ntable\n0 1\n1 x\nend\n") == K::Parse);
  CHECK(catalog_error("group 2 2/a\ntable\n0 1\n1 2\nend\n") == K::Parse);
  CHECK(catalog_error("group 2 3/a\ntable\n0 1\n1 0\nend\n") == K::InvalidGroup);
  CHECK(catalog_error("group 2 2/a\ntable\n1 0\n0 1\nend\n") == K::InvalidGroup);
  CHECK(catalog_error_text("\n\ngroup 2 2/a\ntable\n0 1\n1 2\nend\n").find("line 6") != std::string::npos);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto cat = parse_catalog("# header\n\ngroup 2 2/a   # trailing\ntable\n0 1 # row\n\n1 0\nend\n# done\n");
  CHECK(cat.entries(2).size() == 1);
}

TEST_CASE("groups_of_order") {
  const auto cat = load_bundled_catalog();
  CHECK(groups_of_order(15, cat).size() == 1);
  CHECK(groups_of_order(6, cat).size() == 2);
  CHECK_THROWS_AS(groups_of_order(64, cat), CatalogError);
  try {
    groups_of_order(64, cat);
  } catch (const CatalogError& e) {
    CHECK(e.kind() == CatalogError::Kind::IncompleteCatalog);
  }
  CHECK(groups_of_order(64, cat, GroupMode::kAbelian).size() == 11);
  // A catalog missing one type of order 8 is not complete.
  GroupCatalog partial;
  for (std::size_t i = 0; i + 1 < cat.entries(8).size(); ++i) partial.add(cat.entries(8)[i]);
  CHECK_FALSE(partial.complete(8));
  CHECK_THROWS_AS(groups_of_order(8, partial), CatalogError);
}

TEST_CASE("brute-force group enumeration") {
  CHECK(enumerate_groups_of_order(1).size() == 1);
  CHECK(enumerate_groups_of_order(4).size() == 2);
  CHECK(enumerate_groups_of_order(6).size() == 2);
  CHECK(enumerate_groups_of_order(8).size() == 5);
  CHECK(enumerate_groups_of_order(9).size() == 2);
  CHECK(enumerate_groups_of_order(12).size() == 5);
  CHECK_THROWS_AS(enumerate_groups_of_order(13), OrderTooLarge);
}

TEST_CASE("bundled catalog") {
  const auto cat = load_bundled_catalog();
  for (std::size_t n : cat.orders()) {
    CHECK_MESSAGE(cat.complete(n), "order " << n);
    for (const auto& g : cat.entries(n)) {
      CHECK(g.order() == n);
      CHECK(g.label().rfind(std::to_string(n) + "/", 0) == 0);
    }
  }
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 15u, 16u, 20u, 21u, 24u, 25u,
                        27u, 28u, 33u, 39u, 45u, 49u, 88u, 110u, 171u, 175u, 178u, 183u, 204u}) {
    CHECK_MESSAGE(cat.complete(n), "order " << n);
  }
  // Matches the independent enumeration for small orders.
  for (std::size_t n = 1; n <= kMaxBruteForceOrder; ++n) {
    const auto listed = cat.entries(n);
    const auto found = enumerate_groups_of_order(n);
    REQUIRE(listed.size() == found.size());
    for (const auto& g : found) {
      CHECK(std::count_if(listed.begin(), listed.end(),
                          [&](const FiniteGroup& h) { return isomorphic(g, h); }) == 1);
    }
  }
}

TEST_CASE("prime-index extensions reproduce the known counts") {
  for (std::size_t n = 1; n <= 30; ++n) CHECK(prime_index_extensions(n).size() == *known_group_count(n));
  CHECK(prime_index_extensions(63).size() == 4);
}

TEST_CASE("catalog round trip through text") {
  const auto cat = load_bundled_catalog();
  std::string text;
  for (const auto& g : cat.entries(12)) text += format_catalog_entry(g, describe_group(g));
  const auto again = parse_catalog(text);
  REQUIRE(again.entries(12).size() == cat.entries(12).size());
  for (std::size_t i = 0; i < again.entries(12).size(); ++i) {
    CHECK(again.entries(12)[i] == cat.entries(12)[i]);
    CHECK(again.entries(12)[i].label() == cat.entries(12)[i].label());
  }

  const auto dir = std::filesystem::temp_directory_path() / "skewbrace_catalog_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "a.gcat") << kOrder4;
  CHECK(load_catalog_dir(dir).complete(4));
  CHECK(load_catalog_file(dir / "a.gcat").entries(4).size() == 2);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(load_catalog_file(dir / "missing.gcat"), CatalogError);
}

TEST_CASE("resolve_group") {
  const auto cat = load_bundled_catalog();
  CHECK(resolve_group("8/4-custom", cat).order() == 8);
  const auto g = resolve_group("12/C2xC6", cat);
  CHECK(isomorphic(g, direct_product(cyclic_group(2), cyclic_group(6))));
  CHECK(resolve_group("1/C1", cat).order() == 1);
  CHECK_THROWS_AS(resolve_group("12/C2xC5", cat), CatalogError);
  CHECK_THROWS_AS(resolve_group("nonsense", cat), CatalogError);
  CHECK(describe_group(g) == "abelian C2xC6");
  CHECK(describe_group(testing::symmetric3()) == "nonabelian, center 1, exponent 6");
}
