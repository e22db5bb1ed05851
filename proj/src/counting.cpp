#include "skewbrace/counting.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "skewbrace/detail/parallel.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_prime_power(std::size_t n) { return n > 1 && factorize(n).size() == 1; }

std::optional<std::string> identify(const FiniteGroup& g, const GroupCatalog* cat) {
  if (cat == nullptr || !cat->complete(g.order())) return std::nullopt;
  for (const auto& h : cat->entries(g.order())) {
    if (isomorphic(g, h)) return h.label();
  }
  return std::nullopt;
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

GroupClassification classify_regular_subgroups(const AutGroup& a, const CountOptions& opt) {
  GroupClassification out;
  if (opt.strategy == Strategy::kConjugacy) {
    auto r = enumerate_via_subgroup_conjugacy(a, opt.hol_cap);
    out.regular_count = r.regular_count;
    out.classes = std::move(r.classes);
  } else if (opt.sylow && is_prime_power(a.group().order())) {
    auto r = enumerate_via_sylow(a, opt.threads);
    for (const auto& c : r.classes) out.regular_count += c.orbit_size;
    out.classes = std::move(r.classes);
  } else {
    const auto all = enumerate_transversals(a, opt.threads);
    out.regular_count = all.size();
    out.classes = aut_orbit_classes(a, all);
  }
  return out;
}

BraceRecord make_brace_record(const SkewBrace& b, const GroupCatalog* cat) {
  BraceRecord r;
  r.order = b.order();
  r.add_group_id = b.add_group_id();
  r.circ_table.assign(b.circ_table().begin(), b.circ_table().end());
  r.is_left_brace = is_left_brace(b);
  r.mult_group_id = identify(multiplicative_group(b), cat);
  return r;
}

CountReport count_braces(std::size_t n, const GroupCatalog& cat, const CountOptions& opt) {
  const auto groups =
      groups_of_order(n, cat, opt.abelian_only ? GroupMode::kAbelian : GroupMode::kAll);

  CountReport report;
  report.order = n;
  report.abelian_only = opt.abelian_only;
  report.groups.resize(groups.size());
  std::vector<std::vector<BraceRecord>> braces(groups.size());

  // Split threads across groups, or inside the search for a single group.
  CountOptions inner = opt;
  inner.threads = groups.size() == 1 ? opt.threads : 1;
  detail::parallel_for(groups.size(), opt.threads, [&](std::size_t i) {
    const FiniteGroup& g = groups[i];
    GroupCount& row = report.groups[i];
    row.group_id = g.label();
    row.abelian = is_abelian(g);
    try {
      const AutGroup a = AutGroup::compute(g, opt.aut_cap);
      auto cls = classify_regular_subgroups(a, inner);
      row.regular_count = cls.regular_count;
      row.class_count = cls.classes.size();
      if (opt.keep_braces) {
        for (const auto& c : cls.classes) {
          braces[i].push_back(make_brace_record(brace_from_transversal(a, c.rep), &cat));
        }
      }
    } catch (const AutTooLarge& e) {
      row.skip_reason = e.what();
    } catch (const HolTooLarge& e) {
      row.skip_reason = e.what();
    }
  });

  bool all_counted = true;
  bool abelian_counted = true;
  std::size_t b = 0, s = 0;
  for (const auto& row : report.groups) {
    if (!row.class_count) {
      all_counted = false;
      if (row.abelian) abelian_counted = false;
      continue;
    }
    s += *row.class_count;
    if (row.abelian) b += *row.class_count;
  }
  if (abelian_counted) report.b = b;
  if (all_counted && !opt.abelian_only) report.s = s;
  report.complete = all_counted;
  for (auto& list : braces) {
    std::move(list.begin(), list.end(), std::back_inserter(report.braces));
  }
  return report;
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::kP: return "p";
    case Shape::kP2: return "p^2";
    case Shape::kPQ: return "pq";
    case Shape::k2PQ: return "2pq";
    case Shape::k4Q: return "4q";
    case Shape::k8P: return "8p";
    case Shape::k12P: return "12p";
    case Shape::kP2Q: return "p^2q";
    case Shape::kNone: break;
  }
  return "none";
}

PredictedCounts predicted_counts(std::size_t n) {
  PredictedCounts out;
  out.order = n;
  if (n < 2) return out;
  const auto f = factorize(n);
  auto set = [&](Shape shape, std::optional<std::size_t> b, std::size_t s) {
    out.shape = shape;
    out.b_pred = b;
    out.s_pred = s;
    return out;
  };

  if (f.size() == 1) {
    if (f[0].second == 1) return set(Shape::kP, 1, 1);
    if (f[0].second == 2) return set(Shape::kP2, 4, 4);
    return out;
  }
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
    const std::size_t p = f[0].first, q = f[1].first;
    // b <= s, so s = 1 forces b = 1.
    if ((q - 1) % p != 0) return set(Shape::kPQ, 1, 1);
    return set(Shape::kPQ, std::nullopt, 2 * p + 2);
  }
  if (f.size() == 3 && f[0].first == 2 && f[0].second == 1 && f[1].second == 1 &&
      f[2].second == 1) {
    const std::size_t p = f[1].first, q = f[2].first;
    if ((q - 1) % p != 0) return set(Shape::k2PQ, 4, 36);
    return set(Shape::k2PQ, 6, 8 * p + 54);
  }
  if (f.size() == 2 && f[0].first == 2 && f[0].second == 2 && f[1].second == 1 &&
      f[1].first >= 5) {
    if (f[1].first % 4 == 3) return set(Shape::k4Q, 9, 29);
    return set(Shape::k4Q, 11, 43);
  }
  if (f.size() == 2 && f[0].first == 2 && f[0].second == 3 && f[1].second == 1 &&
      f[1].first >= 11) {
    const std::size_t r = f[1].first % 8;
    if (r == 3 || r == 7) return set(Shape::k8P, 90, 800);
    if (r == 5) return set(Shape::k8P, 106, 944);
    return set(Shape::k8P, 108, 986);
  }
  if (f.size() == 3 && f[0].first == 2 && f[0].second == 2 && f[1].first == 3 &&
      f[1].second == 1 && f[2].second == 1 && f[2].first >= 7) {
    switch (f[2].first % 12) {
      case 11: return set(Shape::k12P, 24, 324);
      case 5: return set(Shape::k12P, 28, 410);
      case 7: return set(Shape::k12P, 34, 606);
      default: return set(Shape::k12P, 40, 782);
    }
  }
  if (f.size() == 2 && (f[0].second == 2) != (f[1].second == 2) &&
      f[0].second + f[1].second == 3) {
    const std::size_t p = f[0].second == 2 ? f[0].first : f[1].first;
    const std::size_t q = f[0].second == 2 ? f[1].first : f[0].first;
    if (q > p + 1 && p + 1 > 3) {
      auto b_for = [](std::size_t p_, std::size_t k) -> std::size_t {
        if (k % p_ != 0) return 4;
        if (k % (p_ * p_) != 0) return p_ + 8;
        return 2 * p_ + 8;
      };
      const std::size_t b = b_for(p, q - 1);
      std::size_t s = 4;
      if ((q - 1) % p == 0) {
        s = (q - 1) % (p * p) == 0 ? 6 * p * p + 6 * p + 8 : 2 * p * p + 7 * p + 8;
      }
      set(Shape::kP2Q, b, s);
      // The alternative reading tests 3 and 9 against p - 1.
      std::size_t literal = 4;
      if ((p - 1) % 3 == 0) literal = (p - 1) % 9 == 0 ? 2 * p + 8 : p + 8;
      if (literal != b) out.b_literal_reading = literal;
      return out;
    }
  }
  return out;
}

std::vector<ConjectureLine> run_conjecture_check(std::size_t from, std::size_t to,
                                                 const GroupCatalog& cat, std::size_t max_order,
                                                 unsigned threads) {
  std::vector<ConjectureLine> out;
  for (std::size_t n = from; n <= to; ++n) {
    ConjectureLine line;
    line.predicted = predicted_counts(n);
    if (line.predicted.shape == Shape::kNone) {
      line.status = CheckStatus::kNoFormula;
      out.push_back(std::move(line));
      continue;
    }
    if (n > max_order) {
      line.status = CheckStatus::kSkipped;
      line.note = "order above limit " + std::to_string(max_order);
      out.push_back(std::move(line));
      continue;
    }
    try {
      CountOptions opt;
      opt.threads = threads;
      const CountReport r = count_braces(n, cat, opt);
      line.b = r.b;
      line.s = r.s;
      if (!r.complete) {
        line.status = CheckStatus::kSkipped;
        for (const auto& g : r.groups) {
          if (!g.skip_reason.empty()) {
            line.note = g.group_id + ": " + g.skip_reason;
            break;
          }
        }
      } else {
        const auto& p = line.predicted;
        const bool ok = (!p.b_pred || p.b_pred == r.b) && (!p.s_pred || p.s_pred == r.s);
        line.status = ok ? CheckStatus::kAgree : CheckStatus::kDisagree;
      }
    } catch (const CatalogError& e) {
      line.status = CheckStatus::kSkipped;
      line.note = e.what();
    }
    if (line.predicted.b_literal_reading) {
      if (!line.note.empty()) line.note += "; ";
      line.note += "reading the b conditions on p-1 would give b=" +
                   std::to_string(*line.predicted.b_literal_reading);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string format_conjecture_line(const ConjectureLine& line) {
  const auto& p = line.predicted;
  std::ostringstream out;
  out << "n=" << p.order << " shape=" << shape_name(p.shape);
  if (p.shape != Shape::kNone) {
    out << " predicted b=" << (p.b_pred ? std::to_string(*p.b_pred) : "?")
        << " s=" << (p.s_pred ? std::to_string(*p.s_pred) : "?");
  }
  if (line.b || line.s) {
    out << " computed b=" << (line.b ? std::to_string(*line.b) : "?")
        << " s=" << (line.s ? std::to_string(*line.s) : "?");
  }
  switch (line.status) {
    case CheckStatus::kAgree: out << ": agree"; break;
    case CheckStatus::kDisagree: out << ": disagree"; break;
    case CheckStatus::kSkipped: out << ": skipped"; break;
    case CheckStatus::kNoFormula: out << ": n/a"; break;
  }
  if (!line.note.empty()) out << " (" << line.note << ")";
  return out.str();
}

std::vector<BenchmarkRow> run_benchmark(const std::vector<std::size_t>& orders,
                                        const GroupCatalog& cat, std::size_t hol_cap) {
  std::vector<BenchmarkRow> rows;
  for (std::size_t n : orders) {
    std::vector<FiniteGroup> groups;
    try {
      groups = groups_of_order(n, cat);
    } catch (const CatalogError& e) {
      BenchmarkRow row;
      row.order = n;
      row.group_id = "-";
      row.skip_reason = e.what();
      rows.push_back(std::move(row));
      continue;
    }
    for (const auto& g : groups) {
      BenchmarkRow row;
      row.order = n;
      row.group_id = g.label();
      try {
        const AutGroup a = AutGroup::compute(g);
        if (hol_order(a) > hol_cap) throw HolTooLarge(hol_order(a), hol_cap);
        auto t0 = std::chrono::steady_clock::now();
        const auto all = enumerate_transversals(a);
        row.lambda_classes = aut_orbit_classes(a, all).size();
        row.lambda_seconds = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        row.conjugacy_classes = enumerate_via_subgroup_conjugacy(a, hol_cap).classes.size();
        row.conjugacy_seconds = seconds_since(t0);
      } catch (const Error& e) {
        row.skip_reason = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_benchmark(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "order,group_id,lambda_classes,conjugacy_classes,lambda_s,conjugacy_s,ratio,status\n";
  for (const auto& r : rows) {
    out << r.order << ',' << r.group_id << ',' << opt_str(r.lambda_classes) << ','
        << opt_str(r.conjugacy_classes) << ',';
    if (r.skip_reason.empty()) {
      const double ratio = r.conjugacy_seconds / std::max(r.lambda_seconds, 1e-9);
      out << std::fixed << std::setprecision(6) << r.lambda_seconds << ',' << r.conjugacy_seconds
          << ',' << std::setprecision(2) << ratio << ',' << (r.agree() ? "agree" : "DIFFER");
      out.unsetf(std::ios::floatfield);
    } else {
      out << ",,,skipped: " << r.skip_reason;
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const CountReport& r) {
  out << "order,group_id,abelian,regular_count,class_count\n";
  for (const auto& g : r.groups) {
    out << r.order << ',' << g.group_id << ',' << (g.abelian ? "true" : "false") << ','
        << opt_str(g.regular_count) << ',' << opt_str(g.class_count) << '\n';
  }
  out << "order,b,s,complete\n";
  out << r.order << ',' << opt_str(r.b) << ',' << opt_str(r.s) << ','
      << (r.complete ? "true" : "false") << '\n';
}

void write_json(std::ostream& out, const CountReport& r) {
  ordered_json j;
  j["order"] = r.order;
  j["abelian_only"] = r.abelian_only;
  j["groups"] = ordered_json::array();
  for (const auto& g : r.groups) {
    ordered_json row;
    row["group_id"] = g.group_id;
    row["abelian"] = g.abelian;
    row["regular_count"] = opt_json(g.regular_count);
    row["class_count"] = opt_json(g.class_count);
    if (!g.skip_reason.empty()) row["skip_reason"] = g.skip_reason;
    j["groups"].push_back(std::move(row));
  }
  j["b"] = opt_json(r.b);
  j["s"] = opt_json(r.s);
  j["complete"] = r.complete;
  out << j.dump(2) << '\n';
}

void write_brace_db(std::ostream& out, const std::vector<BraceRecord>& braces) {
  for (const auto& b : braces) {
    ordered_json j;
    j["order"] = b.order;
    j["add_group_id"] = b.add_group_id;
    j["circ_table"] = b.circ_table;
    j["is_left_brace"] = b.is_left_brace;
    if (b.mult_group_id) j["mult_group_id"] = *b.mult_group_id;
    out << j.dump() << '\n';
  }
}

BraceRecord parse_brace_record(const std::string& line) {
  BraceRecord r;
  try {
    const auto j = nlohmann::json::parse(line);
    r.order = j.at("order").get<std::size_t>();
    r.add_group_id = j.at("add_group_id").get<std::string>();
    r.circ_table = j.at("circ_table").get<std::vector<Element>>();
    r.is_left_brace = j.at("is_left_brace").get<bool>();
    if (j.contains("mult_group_id")) r.mult_group_id = j["mult_group_id"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed brace record: ") + e.what());
  }
  if (r.order == 0 || r.circ_table.size() != r.order * r.order) {
    throw std::invalid_argument("circ_table does not have order^2 entries");
  }
  return r;
}

}  // namespace skewbrace
