// Command line front end: enumerate, conjectures, benchmark, check-brace, aut.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewbrace/automorphism.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/counting.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/holomorph.hpp"

namespace {

using namespace skewbrace;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kPartial = 2;

// Extra catalog files take precedence over the bundled data for every
// order they mention.
GroupCatalog load_catalogs(const std::vector<std::string>& files) {
  GroupCatalog extra;
  for (const auto& f : files) extra.merge(load_catalog_file(f));
  GroupCatalog cat = load_bundled_catalog();
  if (files.empty()) return cat;
  GroupCatalog out = extra;
  const auto covered = extra.orders();
  for (std::size_t n : cat.orders()) {
    if (std::find(covered.begin(), covered.end(), n) != covered.end()) continue;
    for (const auto& g : cat.entries(n)) out.add(g);
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  return out;
}

struct EnumerateArgs {
  std::size_t order = 0;
  bool abelian_only = false;
  bool sylow = false;
  std::string strategy = "lambda";
  std::vector<std::string> catalogs;
  unsigned threads = 1;
  std::string out;
  std::string format = "csv";
  std::string store_braces;
};

int run_enumerate(const EnumerateArgs& args) {
  const GroupCatalog cat = load_catalogs(args.catalogs);
  CountOptions opt;
  opt.abelian_only = args.abelian_only;
  opt.sylow = args.sylow;
  opt.strategy = args.strategy == "conjugacy" ? Strategy::kConjugacy : Strategy::kLambda;
  opt.threads = args.threads;
  opt.keep_braces = !args.store_braces.empty();
  const CountReport report = count_braces(args.order, cat, opt);

  auto emit = [&](std::ostream& os) {
    if (args.format == "json") {
      write_json(os, report);
    } else {
      write_csv(os, report);
    }
  };
  if (args.out.empty()) {
    emit(std::cout);
  } else {
    auto f = open_out(args.out);
    emit(f);
  }
  if (!args.store_braces.empty()) {
    auto f = open_out(args.store_braces);
    write_brace_db(f, report.braces);
  }
  for (const auto& g : report.groups) {
    if (!g.skip_reason.empty()) std::cerr << "skipped " << g.group_id << ": " << g.skip_reason << '\n';
  }
  return report.complete ? kOk : kPartial;
}

int run_conjectures(const std::string& range, std::size_t max_order, unsigned threads) {
  const auto dots = range.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected A..B");
  const std::size_t from = std::stoul(range.substr(0, dots));
  const std::size_t to = std::stoul(range.substr(dots + 2));
  if (from == 0 || from > to) throw CLI::ValidationError("--range", "expected 1 <= A <= B");

  const GroupCatalog cat = load_bundled_catalog();
  int status = kOk;
  for (std::size_t n = from; n <= to; ++n) {
    const auto lines = run_conjecture_check(n, n, cat, max_order, threads);
    std::cout << format_conjecture_line(lines.front()) << std::endl;
    if (lines.front().status == CheckStatus::kDisagree) status = kError;
    if (lines.front().status == CheckStatus::kSkipped && status == kOk) status = kPartial;
  }
  return status;
}

int run_benchmark_cmd(const std::string& list) {
  std::vector<std::size_t> orders;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) orders.push_back(std::stoul(item));
  }
  const GroupCatalog cat = load_bundled_catalog();
  const auto rows = run_benchmark(orders, cat);
  write_benchmark(std::cout, rows);
  int status = kOk;
  for (const auto& r : rows) {
    if (!r.skip_reason.empty()) {
      if (status == kOk) status = kPartial;
    } else if (!r.agree()) {
      status = kError;
    }
  }
  return status;
}

int run_check_brace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const GroupCatalog cat = load_bundled_catalog();
  std::string line;
  std::size_t line_no = 0, bad = 0, total = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++total;
    std::string problem;
    try {
      const BraceRecord rec = parse_brace_record(line);
      FiniteGroup add = resolve_group(rec.add_group_id, cat);
      if (add.order() != rec.order) {
        problem = "additive group " + rec.add_group_id + " has the wrong order";
      } else {
        const SkewBrace b(std::move(add), rec.circ_table);
        if (const auto t = brace_identity_violation(b)) {
          problem = "brace identity fails at (" + std::to_string((*t)[0]) + ", " +
                    std::to_string((*t)[1]) + ", " + std::to_string((*t)[2]) + ")";
        } else if (!verify_skew_brace(b)) {
          problem = "circ_table is not a group with identity 0";
        } else if (is_left_brace(b) != rec.is_left_brace) {
          problem = "is_left_brace does not match the additive group";
        }
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      std::cout << "line " << line_no << ": ok\n";
    } else {
      ++bad;
      std::cout << "line " << line_no << ": FAIL " << problem << '\n';
    }
  }
  std::cout << total - bad << " of " << total << " records valid\n";
  return bad == 0 ? kOk : kError;
}

int run_aut(const std::string& id) {
  const GroupCatalog cat = load_bundled_catalog();
  const FiniteGroup g = resolve_group(id, cat);
  const AutGroup a = AutGroup::compute(g);
  std::cout << "group " << g.label() << " (" << describe_group(g) << ")\n"
            << "order " << g.order() << "\n"
            << "|Aut| " << a.size() << "\n"
            << "|Hol| " << hol_order(a) << "\n"
            << "Aut generators (images of 0.." << g.order() - 1 << "):\n";
  for (const auto& p : a.perms().generators()) {
    std::cout << " ";
    for (auto x : p.images()) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify skew braces via regular subgroups of the holomorph"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Count braces of one order");
  enumerate->add_option("--order", en.order, "Order n")->required()->check(CLI::Range(1, 100000));
  enumerate->add_flag("--abelian-only", en.abelian_only, "Only abelian additive groups (b(n))");
  enumerate->add_flag("--sylow", en.sylow, "Sylow-restricted search for prime-power orders");
  enumerate->add_option("--strategy", en.strategy, "Classification strategy")
      ->check(CLI::IsMember({"lambda", "conjugacy"}));
  enumerate->add_option("--catalog", en.catalogs, "Extra .gcat files")->check(CLI::ExistingFile);
  enumerate->add_option("--threads", en.threads, "Worker threads")->check(CLI::Range(1, 256));
  enumerate->add_option("--out", en.out, "Report path (default stdout)");
  enumerate->add_option("--format", en.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_option("--store-braces", en.store_braces, "Write one brace per class as JSON lines");

  std::string range;
  std::size_t max_order = 204;
  unsigned conj_threads = 1;
  auto* conjectures = app.add_subcommand("conjectures", "Compare counts with the closed formulas");
  conjectures->add_option("--range", range, "A..B")->required();
  conjectures->add_option("--max-order", max_order, "Skip larger orders");
  conjectures->add_option("--threads", conj_threads, "Worker threads")->check(CLI::Range(1, 256));

  std::string orders;
  auto* benchmark = app.add_subcommand("benchmark", "Time both classification strategies");
  benchmark->add_option("--orders", orders, "Comma-separated orders")->required();

  std::string brace_file;
  auto* check = app.add_subcommand("check-brace", "Validate stored brace records");
  check->add_option("file", brace_file, "Brace database (JSON lines)")->required();

  std::string group_id;
  auto* aut = app.add_subcommand("aut", "Automorphism group of a catalog group");
  aut->add_option("--group", group_id, "Group label, e.g. 8/4-custom or 12/C2xC6")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return run_enumerate(en);
    if (*conjectures) return run_conjectures(range, max_order, conj_threads);
    if (*benchmark) return run_benchmark_cmd(orders);
    if (*check) return run_check_brace(brace_file);
    if (*aut) return run_aut(group_id);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
