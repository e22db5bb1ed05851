#include "skewbrace/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/error.hpp"

#ifndef SKEWBRACE_DATA_DIR
#define SKEWBRACE_DATA_DIR "data/catalog"
#endif

namespace skewbrace {

namespace {

using Kind = CatalogError::Kind;

constexpr std::array<std::size_t, 101> kGroupCounts = {
    0,  1, 1, 1,  2, 1, 2, 1, 5,   2, 2, 1, 5, 1, 2, 1,  14, 1, 5,  1, 5,  2, 2, 1,  15, 2, 2,
    5,  4, 1, 4,  1, 51, 1, 2, 1,  14, 1, 2, 2, 14, 1, 6, 1, 4, 2,  2, 1,  52, 2, 5, 1,  5, 1,
    15, 2, 13, 2, 2, 1, 13, 1, 2,  4, 267, 1, 4, 1, 5, 1,  4, 1, 50, 1, 2,  3, 4, 1, 6,  1, 52,
    15, 2, 1, 15, 1, 2,  1, 12, 1, 10, 1, 4, 2, 2,  1, 231, 1, 5, 2, 16};

const std::map<std::size_t, std::size_t> kExtraGroupCounts = {
    {102, 4}, {110, 6}, {171, 5}, {175, 2}, {178, 2}, {183, 2}, {204, 12}};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw CatalogError(Kind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::optional<std::size_t> label_order(std::string_view label) {
  const auto slash = label.find('/');
  if (slash == std::string_view::npos || slash == 0) return std::nullopt;
  std::size_t n = 0;
  for (char c : label.substr(0, slash)) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

// Appends g unless an isomorphic group is already listed.
bool add_if_new(std::vector<FiniteGroup>& reps, std::vector<std::vector<std::size_t>>& invs,
                FiniteGroup g) {
  auto inv = isomorphism_invariants(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (invs[i] == inv && isomorphic(reps[i], g)) return false;
  }
  reps.push_back(std::move(g));
  invs.push_back(std::move(inv));
  return true;
}

std::vector<FiniteGroup> sorted_by_invariants(std::vector<FiniteGroup> reps,
                                              std::vector<std::vector<std::size_t>> invs) {
  std::vector<std::size_t> idx(reps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return invs[x] < invs[y]; });
  std::vector<FiniteGroup> out;
  out.reserve(reps.size());
  for (std::size_t i : idx) out.push_back(std::move(reps[i]));
  return out;
}

// Cayley table search for enumerate_groups_of_order.  The elements are
// labelled so that 1 has maximal order m, and the left cosets of <1> are the
// blocks {jm, ..., jm + m - 1} with (jm + k) * i = jm + (k + i mod m) for
// i < m.  Columns 0..m-1 are therefore fixed and the search fills the rest.
class TableSearch {
 public:
  TableSearch(std::size_t n, std::size_t m)
      : n_(n), m_(m), t_(n * n, kFree), left_(n * n, kFree), used_row_(n * n, 0),
        used_col_(n * n, 0) {}

  void run(std::vector<std::vector<Element>>& out) {
    for (Element a = 0; a < n_; ++a) {
      for (Element i = 0; i < m_; ++i) {
        const Element v = static_cast<Element>((a / m_) * m_ + (a % m_ + i) % m_);
        if (!assign(a, i, v)) return;
      }
    }
    for (Element b = static_cast<Element>(m_); b < n_; ++b) {
      if (!assign(0, b, b)) return;
    }
    out_ = &out;
    fill(0);
  }

 private:
  static constexpr Element kFree = ~Element{0};

  Element at(Element a, Element b) const { return t_[a * n_ + b]; }

  // left_[x * n + v] is the y with x * y = v, if assigned.
  bool assign(Element a, Element b, Element v) {
    if (used_row_[a * n_ + v] || used_col_[b * n_ + v]) return false;
    t_[a * n_ + b] = v;
    left_[a * n_ + v] = b;
    used_row_[a * n_ + v] = 1;
    used_col_[b * n_ + v] = 1;
    if (!associative_at(a, b, v)) {
      unassign(a, b, v);
      return false;
    }
    return true;
  }

  void unassign(Element a, Element b, Element v) {
    t_[a * n_ + b] = kFree;
    left_[a * n_ + v] = kFree;
    used_row_[a * n_ + v] = 0;
    used_col_[b * n_ + v] = 0;
  }

  // (xy)z = x(yz) for every triple in which a*b = v appears and all other
  // products are known.
  bool associative_at(Element a, Element b, Element v) const {
    for (Element z = 0; z < n_; ++z) {
      // x = a, y = b.
      const Element vz = at(v, z), bz = at(b, z);
      if (vz != kFree && bz != kFree) {
        const Element r = at(a, bz);
        if (r != kFree && r != vz) return false;
      }
      // y = a, z = b, x = z.
      const Element xa = at(z, a);
      if (xa != kFree) {
        const Element l = at(xa, b), r = at(z, v);
        if (l != kFree && r != kFree && l != r) return false;
      }
      // xy = a with x = z, outer product a * b.
      const Element y = left_[z * n_ + a];
      if (y != kFree) {
        const Element yb = at(y, b);
        if (yb != kFree) {
          const Element r = at(z, yb);
          if (r != kFree && r != v) return false;
        }
      }
      // yz = b with y = z, outer product a * b.
      const Element w = left_[z * n_ + b];
      if (w != kFree) {
        const Element az = at(a, z);
        if (az != kFree) {
          const Element l = at(az, w);
          if (l != kFree && l != v) return false;
        }
      }
    }
    return true;
  }

  void fill(std::size_t cell) {
    while (cell < n_ * n_ && t_[cell] != kFree) ++cell;
    if (cell == n_ * n_) {
      if (max_order() == m_) out_->push_back(t_);
      return;
    }
    const auto a = static_cast<Element>(cell / n_), b = static_cast<Element>(cell % n_);
    for (Element v = 0; v < n_; ++v) {
      if (!assign(a, b, v)) continue;
      fill(cell + 1);
      unassign(a, b, v);
    }
  }

  std::size_t max_order() const {
    std::size_t best = 1;
    for (Element x = 1; x < n_; ++x) {
      std::size_t k = 1;
      for (Element y = x; y != 0; y = at(y, x)) ++k;
      best = std::max(best, k);
    }
    return best;
  }

  std::size_t n_, m_;
  std::vector<Element> t_, left_;
  std::vector<char> used_row_, used_col_;
  std::vector<std::vector<Element>>* out_ = nullptr;
};

}  // namespace

void GroupCatalog::add(FiniteGroup g) {
  auto& list = entries_[g.order()];
  for (const auto& h : list) {
    if (isomorphic(h, g)) {
      throw CatalogError(Kind::DuplicateIsoType,
                         g.label() + " is isomorphic to " + h.label());
    }
  }
  list.push_back(std::move(g));
}

void GroupCatalog::merge(const GroupCatalog& other) {
  for (const auto& [n, list] : other.entries_) {
    for (const auto& g : list) add(g);
  }
}

const std::vector<FiniteGroup>& GroupCatalog::entries(std::size_t n) const {
  static const std::vector<FiniteGroup> kEmpty;
  const auto it = entries_.find(n);
  return it == entries_.end() ? kEmpty : it->second;
}

bool GroupCatalog::complete(std::size_t n) const {
  const auto known = known_group_count(n);
  return known && entries(n).size() == *known;
}

std::vector<std::size_t> GroupCatalog::orders() const {
  std::vector<std::size_t> out;
  for (const auto& [n, list] : entries_) out.push_back(n);
  return out;
}

const FiniteGroup* GroupCatalog::find(std::string_view label) const {
  for (const auto& [n, list] : entries_) {
    for (const auto& g : list) {
      if (g.label() == label) return &g;
    }
  }
  return nullptr;
}

GroupCatalog parse_catalog(std::string_view text) {
  GroupCatalog cat;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;

  enum class State { kOutside, kExpectTable, kRows, kExpectEnd } state = State::kOutside;
  std::size_t order = 0, header_line = 0;
  std::string label;
  std::vector<std::vector<Element>> rows;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    std::istringstream words(line);
    switch (state) {
      case State::kOutside: {
        std::string kw, extra;
        long long n = 0;
        if (!(words >> kw) || kw != "group") parse_error(line_no, "expected 'group'");
        if (!(words >> n) || n <= 0) parse_error(line_no, "bad group order");
        if (!(words >> label)) parse_error(line_no, "missing group label");
        if (words >> extra) parse_error(line_no, "trailing text after label");
        order = static_cast<std::size_t>(n);
        if (label_order(label) != order) {
          throw CatalogError(Kind::InvalidGroup, "line " + std::to_string(line_no) + ": label " +
                                                     label + " does not start with " +
                                                     std::to_string(order) + "/");
        }
        header_line = line_no;
        rows.clear();
        state = State::kExpectTable;
        break;
      }
      case State::kExpectTable:
        if (line != "table") parse_error(line_no, "expected 'table'");
        state = State::kRows;
        break;
      case State::kRows: {
        std::vector<Element> row;
        long long v = 0;
        while (words >> v) {
          if (v < 0 || static_cast<std::size_t>(v) >= order) {
            parse_error(line_no, "entry " + std::to_string(v) + " out of range");
          }
          row.push_back(static_cast<Element>(v));
        }
        if (!words.eof()) parse_error(line_no, "non-numeric table entry");
        if (row.size() != order) {
          parse_error(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                                   std::to_string(order));
        }
        rows.push_back(std::move(row));
        if (rows.size() == order) state = State::kExpectEnd;
        break;
      }
      case State::kExpectEnd: {
        if (line != "end") parse_error(line_no, "expected 'end'");
        for (std::size_t i = 0; i < order; ++i) {
          if (rows[0][i] != i || rows[i][0] != i) {
            throw CatalogError(Kind::InvalidGroup,
                               label + " (line " + std::to_string(header_line) +
                                   "): element 0 is not the identity");
          }
        }
        try {
          cat.add(validate_group_table(rows, label));
        } catch (const GroupTableError& e) {
          throw CatalogError(Kind::InvalidGroup, label + " (line " + std::to_string(header_line) +
                                                     "): " + e.what());
        }
        state = State::kOutside;
        break;
      }
    }
  }
  if (state != State::kOutside) parse_error(line_no, "unterminated group record");
  return cat;
}

GroupCatalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError(Kind::Parse, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_catalog(buf.str());
  } catch (const CatalogError& e) {
    throw CatalogError(e.kind(), path.string() + ": " + e.what());
  }
}

GroupCatalog load_catalog_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gcat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  GroupCatalog cat;
  for (const auto& f : files) cat.merge(load_catalog_file(f));
  return cat;
}

GroupCatalog load_bundled_catalog() { return load_catalog_dir(SKEWBRACE_DATA_DIR); }

std::string format_catalog_entry(const FiniteGroup& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "group " << g.order() << ' ' << g.label() << "\ntable\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::vector<FiniteGroup> groups_of_order(std::size_t n, const GroupCatalog& cat, GroupMode mode) {
  if (mode == GroupMode::kAbelian) return abelian_groups_of_order(n);
  if (!cat.complete(n)) {
    const auto known = known_group_count(n);
    throw CatalogError(Kind::IncompleteCatalog,
                       "catalog has " + std::to_string(cat.entries(n).size()) +
                           " groups of order " + std::to_string(n) +
                           (known ? ", expected " + std::to_string(*known)
                                  : ", and the number of groups of this order is not tabulated"));
  }
  return cat.entries(n);
}

std::vector<FiniteGroup> enumerate_groups_of_order(std::size_t n) {
  if (n == 0 || n > kMaxBruteForceOrder) {
    throw OrderTooLarge("brute-force group enumeration supports orders 1.." +
                        std::to_string(kMaxBruteForceOrder) + ", got " + std::to_string(n));
  }
  std::vector<std::vector<Element>> tables;
  for (std::size_t m = n == 1 ? 1 : 2; m <= n; ++m) {
    if (n % m == 0) TableSearch(n, m).run(tables);
  }
  std::vector<FiniteGroup> reps;
  std::vector<std::vector<std::size_t>> invs;
  for (auto& t : tables) {
    add_if_new(reps, invs,
               FiniteGroup::from_trusted_table(std::move(t), n, std::to_string(n) + "/enum"));
  }
  auto out = sorted_by_invariants(std::move(reps), std::move(invs));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].set_label(std::to_string(n) + "/" + std::to_string(i + 1) + "-enum");
  }
  return out;
}

std::vector<FiniteGroup> prime_index_extensions(std::size_t n) {
  static std::map<std::size_t, std::vector<FiniteGroup>> memo;
  if (const auto it = memo.find(n); it != memo.end()) return it->second;
  if (n == 1) return memo[1] = {FiniteGroup()};

  std::vector<FiniteGroup> reps;
  std::vector<std::vector<std::size_t>> invs;
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t m = n / p;
    for (const FiniteGroup& base : prime_index_extensions(m)) {
      const AutGroup aut = AutGroup::compute(base);
      for (AutIndex sigma = 0; sigma < aut.size(); ++sigma) {
        // sigma^i for i = 0..p.
        std::vector<AutIndex> pw(p + 1, aut.identity());
        for (std::size_t i = 1; i <= p; ++i) pw[i] = aut.mul(pw[i - 1], sigma);
        for (Element a = 0; a < m; ++a) {
          if (aut.apply(sigma, a) != a) continue;
          bool inner = true;
          for (Element x = 0; x < m && inner; ++x) {
            inner = aut.apply(pw[p], x) == base.mul(base.mul(a, x), base.inv(a));
          }
          if (!inner) continue;
          // x t^i encoded as i * m + x.
          std::vector<Element> t(n * n);
          for (std::size_t i = 0; i < p; ++i) {
            for (Element x = 0; x < m; ++x) {
              for (std::size_t j = 0; j < p; ++j) {
                for (Element y = 0; y < m; ++y) {
                  Element z = base.mul(x, aut.apply(pw[i], y));
                  std::size_t k = i + j;
                  if (k >= p) {
                    z = base.mul(z, a);
                    k -= p;
                  }
                  t[(i * m + x) * n + j * m + y] = static_cast<Element>(k * m + z);
                }
              }
            }
          }
          add_if_new(reps, invs, FiniteGroup::from_trusted_table(std::move(t), n, ""));
        }
      }
    }
  }
  auto out = sorted_by_invariants(std::move(reps), std::move(invs));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].set_label(std::to_string(n) + "/" + std::to_string(i + 1) + "-custom");
  }
  return memo[n] = out;
}

std::optional<std::size_t> known_group_count(std::size_t n) {
  if (n >= 1 && n < kGroupCounts.size()) return kGroupCounts[n];
  if (const auto it = kExtraGroupCounts.find(n); it != kExtraGroupCounts.end()) return it->second;
  return std::nullopt;
}

FiniteGroup resolve_group(std::string_view label, const GroupCatalog& cat) {
  if (const FiniteGroup* g = cat.find(label)) return *g;
  const auto n = label_order(label);
  const auto unknown = [&] {
    return CatalogError(Kind::UnknownGroup, "unknown group " + std::string(label));
  };
  if (!n) throw unknown();
  std::vector<std::size_t> factors;
  std::size_t product = 1;
  std::string_view rest = label.substr(label.find('/') + 1);
  while (!rest.empty()) {
    const auto x = rest.find('x');
    const std::string_view part = rest.substr(0, x);
    rest = x == std::string_view::npos ? std::string_view{} : rest.substr(x + 1);
    if (part.size() < 2 || part[0] != 'C') throw unknown();
    std::size_t f = 0;
    for (char c : part.substr(1)) {
      if (c < '0' || c > '9' || f > 100000) throw unknown();
      f = f * 10 + static_cast<std::size_t>(c - '0');
    }
    if (f == 0) throw unknown();
    factors.push_back(f);
    product *= f;
  }
  if (factors.empty() || product != *n) throw unknown();
  if (factors.size() == 1 && factors[0] == 1) return FiniteGroup();
  return abelian_group(factors);
}

std::string describe_group(const FiniteGroup& g) {
  if (is_abelian(g)) {
    for (const auto& h : abelian_groups_of_order(g.order())) {
      if (isomorphic(g, h)) return "abelian " + h.label().substr(h.label().find('/') + 1);
    }
  }
  return "nonabelian, center " + std::to_string(center_size(g)) + ", exponent " +
         std::to_string(exponent(g));
}

}  // namespace skewbrace
