#pragma once

// Counting skew braces of a given order, predicted counts for the orders
// with a closed formula, and report export.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/regular.hpp"

namespace skewbrace {

enum class Strategy { kLambda, kConjugacy };

struct CountOptions {
  bool abelian_only = false;
  /// Use the Sylow-restricted search when n is a prime power.
  bool sylow = false;
  Strategy strategy = Strategy::kLambda;
  unsigned threads = 1;
  /// Keep one brace per class in the report.
  bool keep_braces = false;
  std::size_t aut_cap = kDefaultAutCap;
  std::size_t hol_cap = kDefaultHolCap;
};

struct GroupCount {
  std::string group_id;
  bool abelian = false;
  /// Empty when the group was skipped.
  std::optional<std::size_t> regular_count;
  std::optional<std::size_t> class_count;
  std::string skip_reason;
};

struct BraceRecord {
  std::size_t order = 0;
  std::string add_group_id;
  std::vector<Element> circ_table;
  bool is_left_brace = false;
  std::optional<std::string> mult_group_id;
};

struct CountReport {
  std::size_t order = 0;
  bool abelian_only = false;
  std::vector<GroupCount> groups;
  std::optional<std::size_t> b;
  /// Only for full runs with every group counted.
  std::optional<std::size_t> s;
  /// No group was skipped (and, for full runs, the catalog is complete).
  bool complete = false;
  std::vector<BraceRecord> braces;
};

/// Counts regular subgroups and their classes for every additive group of
/// order n.  Groups whose automorphism group or holomorph exceeds the caps
/// are reported as skipped.  Throws CatalogError(IncompleteCatalog) for a
/// full run on an order the catalog does not cover.
CountReport count_braces(std::size_t n, const GroupCatalog& cat, const CountOptions& opt = {});

/// Classes for one additive group with the chosen strategy.
struct GroupClassification {
  std::size_t regular_count = 0;
  std::vector<RegularClass> classes;
};
GroupClassification classify_regular_subgroups(const AutGroup& a, const CountOptions& opt);

enum class Shape { kNone, kP, kP2, kPQ, k2PQ, k4Q, k8P, k12P, kP2Q };

std::string shape_name(Shape s);

struct PredictedCounts {
  std::size_t order = 0;
  Shape shape = Shape::kNone;
  std::optional<std::size_t> b_pred;
  std::optional<std::size_t> s_pred;
  /// For p^2 q: the b value when the divisibility conditions are read on
  /// p - 1 instead of q - 1, if it differs from b_pred.
  std::optional<std::size_t> b_literal_reading;
};

PredictedCounts predicted_counts(std::size_t n);

enum class CheckStatus { kAgree, kDisagree, kSkipped, kNoFormula };

struct ConjectureLine {
  PredictedCounts predicted;
  CheckStatus status = CheckStatus::kNoFormula;
  std::optional<std::size_t> b;
  std::optional<std::size_t> s;
  std::string note;
};

/// Every n in [from, to]: orders with a formula and a feasible enumeration
/// are counted and compared; the others are reported as skipped or without
/// formula.
std::vector<ConjectureLine> run_conjecture_check(std::size_t from, std::size_t to,
                                                 const GroupCatalog& cat, std::size_t max_order,
                                                 unsigned threads = 1);

std::string format_conjecture_line(const ConjectureLine& line);

struct BenchmarkRow {
  std::size_t order = 0;
  std::string group_id;
  std::optional<std::size_t> lambda_classes;
  std::optional<std::size_t> conjugacy_classes;
  double lambda_seconds = 0;
  double conjugacy_seconds = 0;
  std::string skip_reason;

  bool agree() const { return lambda_classes && lambda_classes == conjugacy_classes; }
};

/// Both strategies on every catalog group of each order.
std::vector<BenchmarkRow> run_benchmark(const std::vector<std::size_t>& orders,
                                        const GroupCatalog& cat,
                                        std::size_t hol_cap = kDefaultHolCap);

void write_benchmark(std::ostream& out, const std::vector<BenchmarkRow>& rows);

void write_csv(std::ostream& out, const CountReport& r);
void write_json(std::ostream& out, const CountReport& r);
/// One JSON object per line.
void write_brace_db(std::ostream& out, const std::vector<BraceRecord>& braces);

BraceRecord make_brace_record(const SkewBrace& b, const GroupCatalog* cat);

/// Parses one brace-database line.  Throws std::invalid_argument on
/// malformed input.
BraceRecord parse_brace_record(const std::string& line);

}  // namespace skewbrace
