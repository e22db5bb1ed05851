#pragma once

// Lists of groups of a given order, one per isomorphism class.
//
// Catalog files (.gcat) are line oriented:
//
//   # comment
//   group 6 6/2-custom
//   table
//   0 1 2 3 4 5
//   ...
//   end
//
// Row a, column b holds a*b; the identity must be element 0.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

class GroupCatalog {
 public:
  /// Adds a group under its order.  Throws CatalogError(DuplicateIsoType) if
  /// an isomorphic group of that order is already present.
  void add(FiniteGroup g);

  /// Adds every entry of `other`, with the same duplicate check.
  void merge(const GroupCatalog& other);

  const std::vector<FiniteGroup>& entries(std::size_t n) const;

  /// The entry count equals the number of isomorphism types of order n.
  bool complete(std::size_t n) const;

  std::vector<std::size_t> orders() const;
  const FiniteGroup* find(std::string_view label) const;

 private:
  std::map<std::size_t, std::vector<FiniteGroup>> entries_;
};

GroupCatalog parse_catalog(std::string_view text);
GroupCatalog load_catalog_file(const std::filesystem::path& path);

/// Every .gcat file in `dir`, in file-name order.
GroupCatalog load_catalog_dir(const std::filesystem::path& dir);

/// The catalog shipped in the repository's data directory.
GroupCatalog load_bundled_catalog();

std::string format_catalog_entry(const FiniteGroup& g, std::string_view comment = {});

enum class GroupMode { kAll, kAbelian };

/// kAbelian: the abelian groups of order n, generated directly.
/// kAll: the catalog entries of order n, in catalog order.  Throws
/// CatalogError(IncompleteCatalog) if the catalog does not certify that
/// every isomorphism type is present.
std::vector<FiniteGroup> groups_of_order(std::size_t n, const GroupCatalog& cat,
                                         GroupMode mode = GroupMode::kAll);

inline constexpr std::size_t kMaxBruteForceOrder = 12;

/// All groups of order n up to isomorphism by Cayley table backtracking.
/// Throws OrderTooLarge above kMaxBruteForceOrder.
std::vector<FiniteGroup> enumerate_groups_of_order(std::size_t n);

/// Groups N<t> with N normal of prime index p, t x t^-1 = sigma(x) and
/// t^p = a, over all groups N of order n/p built the same way.  Every
/// solvable group arises, so for orders without non-solvable groups the
/// result lists each isomorphism type once.  Sorted by invariants.
/// Results are memoized without locking; call from one thread.
std::vector<FiniteGroup> prime_index_extensions(std::size_t n);

/// Number of isomorphism types of groups of order n, where tabulated.
std::optional<std::size_t> known_group_count(std::size_t n);

/// A catalog label, or a product of cyclic groups written "n/C2xC6".
/// Throws CatalogError(UnknownGroup) otherwise.
FiniteGroup resolve_group(std::string_view label, const GroupCatalog& cat);

/// Short description for catalog comments, e.g. "abelian C2xC6" or
/// "nonabelian, center 2, exponent 6".
std::string describe_group(const FiniteGroup& g);

}  // namespace skewbrace
