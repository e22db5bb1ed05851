// Regenerates the bundled .gcat files from prime-index extensions.
//
//   make_catalog OUTDIR [ORDER...]

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "skewbrace/catalog.hpp"
#include "skewbrace/error.hpp"

namespace {

const std::vector<std::size_t> kDefaultOrders = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15,  16,  17,  18,  19,  20,  21, 22,
    23, 24, 25, 26, 27, 28, 29, 30, 33, 39, 45, 49, 88, 110, 171, 175, 178, 183, 204};

}  // namespace

int main(int argc, char** argv) {
  using namespace skewbrace;
  if (argc < 2) {
    std::cerr << "usage: make_catalog OUTDIR [ORDER...]\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::vector<std::size_t> orders;
  for (int i = 2; i < argc; ++i) orders.push_back(std::stoul(argv[i]));
  if (orders.empty()) orders = kDefaultOrders;
  std::filesystem::create_directories(dir);

  int status = 0;
  for (std::size_t n : orders) {
    const auto groups = prime_index_extensions(n);
    const auto known = known_group_count(n);
    if (!known || *known != groups.size()) {
      std::cerr << "order " << n << ": generated " << groups.size() << " groups, expected "
                << (known ? std::to_string(*known) : "?") << '\n';
      status = 1;
      continue;
    }
    char name[32];
    std::snprintf(name, sizeof name, "order_%03zu.gcat", n);
    std::ofstream out(dir / name);
    out << "# Groups of order " << n << ", one per isomorphism type (" << groups.size()
        << " in total).\n";
    for (const auto& g : groups) {
      // Round trip through the validator before writing.
      validate_group_table(std::vector<Element>(g.table().begin(), g.table().end()), n, g.label());
      out << '\n' << format_catalog_entry(g, describe_group(g));
    }
    std::cout << "order " << n << ": " << groups.size() << " groups\n";
  }
  return status;
}
