#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewbrace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table that does not describe a group.
class GroupTableError : public Error {
 public:
  enum class Kind { NotSquare, NotClosed, NoIdentity, NoInverse, NotAssociative };

  GroupTableError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// |Aut(G)| exceeded the configured cap; the group is out of desk scope.
class AutTooLarge : public Error {
 public:
  explicit AutTooLarge(std::size_t cap)
      : Error("automorphism group exceeds cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// |Hol(G)| exceeded the cap of the subgroup-conjugacy strategy.
class HolTooLarge : public Error {
 public:
  HolTooLarge(std::size_t order, std::size_t cap)
      : Error("holomorph of order " + std::to_string(order) + " exceeds cap " +
              std::to_string(cap)) {}
};

class NotAPGroup : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

/// A lambda function that does not satisfy lam_a lam_b = lam_{a + lam_a(b)}.
class ClosureViolated : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  enum class Kind { Parse, InvalidGroup, DuplicateIsoType, IncompleteCatalog, UnknownGroup };

  CatalogError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace skewbrace
