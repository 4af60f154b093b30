#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <fstream>
#include <iostream>
#include <sstream>

#include "topocheck/enumerate.hpp"
#include "topocheck/parallel.hpp"
#include "topocheck/search.hpp"
#include "topocheck/set_classes.hpp"
#include "topocheck/space_doc.hpp"
#include "topocheck/space_props.hpp"
#include "topocheck/verify.hpp"

namespace {

using namespace topocheck;

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kBadTopology = 3,
  kTooLarge = 4,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteSpace load(const std::string& path, std::string* name = nullptr) {
  const SpaceDoc doc = parse_space(read_file(path));
  if (name) *name = doc.name;
  return to_space(doc);
}

int run_classify(const std::string& file, const std::string& set_text) {
  const FiniteSpace sp = load(file);
  const PointSet a = parse_label_set(sp, set_text);
  const ClassReport r = sp.size() <= kExhaustiveWidth ? classify(sp, a) : classify_basic(sp, a);
  std::cout << "SET " << format_set(sp, a) << "\n";
  const auto flags = r.flags();
  const std::array<bool, ClassReport::kFlagCount> known{
      true, true, true, true, true, true, true, true, true,
      r.g_open.has_value(), r.g_closed.has_value(), r.sg_open.has_value(),
      r.sg_closed.has_value(), r.gs_closed.has_value(), r.hsg_closed.has_value()};
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!known[i]) continue;
    std::cout << "CLASS " << flags[i].first << " = " << (flags[i].second ? "true" : "false") << "\n";
  }
  return kOk;
}

int run_check(const std::string& file, const std::string& query, bool assert_true) {
  const FiniteSpace sp = load(file);
  if (query.empty()) {
    for (const SpacePredicate& p : space_predicates()) {
      std::cout << "PROP " << p.name << " = " << (p.eval(sp) ? "true" : "false") << "\n";
    }
    return kOk;
  }
  const PropertyExpr expr = parse_query(query);
  const bool value = expr.evaluate(sp);
  std::cout << "PROP " << expr.to_string() << " = " << (value ? "true" : "false") << "\n";
  return assert_true && !value ? kCheckFailed : kOk;
}

int run_combine(const std::vector<std::string>& files, bool is_product) {
  std::vector<FiniteSpace> spaces;
  std::string name;
  for (const std::string& f : files) {
    std::string part;
    spaces.push_back(load(f, &part));
    name += (name.empty() ? "" : (is_product ? "_x_" : "_plus_")) + part;
  }
  const FiniteSpace out = is_product ? product(spaces).space : sum(spaces).space;
  std::cout << render_space(to_doc(out, name));
  return kOk;
}

int run_search(int n, const std::string& query, const std::string& quest_name,
               std::optional<std::size_t> limit) {
  if (query.empty() == quest_name.empty()) {
    throw Error(Errc::kInvalidArgument, "give exactly one of --query and --quest");
  }
  const SearchOptions options{n, limit, default_workers()};
  std::vector<Witness> found;
  if (!query.empty()) {
    found = search(parse_query(query), options);
  } else {
    const Quest* quest = find_quest(quest_name);
    if (!quest) throw Error(Errc::kUnknownIdentifier, "unknown quest '" + quest_name + "'");
    found = search(*quest, options);
  }
  for (const Witness& w : found) std::cout << w.to_string() << "\n";
  return kOk;
}

int run_verify(const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw Error(Errc::kInvalidArgument, "unknown suite '" + suite_name + "'");
  const std::vector<CheckResult> results = verify_suite(*suite, default_workers());
  for (const CheckResult& r : results) std::cout << r.to_string() << "\n";
  return all_passed(results) ? kOk : kCheckFailed;
}

int run_count(int n, bool oracle) {
  const std::uint64_t count = oracle ? count_spaces_naive(n) : count_spaces(n);
  std::cout << "COUNT " << count << "\n";
  return kOk;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::kNotATopology: return kBadTopology;
    case Errc::kSizeLimitExceeded: return kTooLarge;
    default: return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological space calculator"};
  app.require_subcommand(1);

  std::string file;
  std::string set_text;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a subset of a space");
  classify_cmd->add_option("file", file, "space document")->required();
  classify_cmd->add_option("--set", set_text, "comma-separated labels")->required();

  std::string query;
  bool assert_true = false;
  auto* check_cmd = app.add_subcommand("check", "Evaluate space predicates");
  check_cmd->add_option("file", file, "space document")->required();
  check_cmd->add_option("--query", query, "predicate expression");
  check_cmd->add_flag("--assert", assert_true, "exit 1 when the query is false");

  std::vector<std::string> files;
  auto* product_cmd = app.add_subcommand("product", "Print the product space");
  product_cmd->add_option("files", files, "space documents")->required();
  auto* sum_cmd = app.add_subcommand("sum", "Print the disjoint sum");
  sum_cmd->add_option("files", files, "space documents")->required();

  int n = 0;
  std::string quest;
  std::size_t limit = 0;
  auto* search_cmd = app.add_subcommand("search", "Search enumerated spaces");
  search_cmd->add_option("--n", n, "largest point count")->required();
  search_cmd->add_option("--query", query, "predicate expression");
  search_cmd->add_option("--quest", quest, "named quest");
  auto* limit_opt = search_cmd->add_option("--limit", limit, "stop after this many witnesses");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "all|fixtures|lemmas|products|maps|e1|r1");

  bool oracle = false;
  auto* count_cmd = app.add_subcommand("count", "Count topologies on n labeled points");
  count_cmd->add_option("--n", n, "point count")->required();
  count_cmd->add_flag("--oracle", oracle, "use the naive family enumerator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify_cmd) return run_classify(file, set_text);
    if (*check_cmd) return run_check(file, query, assert_true);
    if (*product_cmd) return run_combine(files, true);
    if (*sum_cmd) return run_combine(files, false);
    if (*search_cmd) {
      return run_search(n, query, quest, *limit_opt ? std::optional<std::size_t>(limit) : std::nullopt);
    }
    if (*verify_cmd) return run_verify(suite);
    if (*count_cmd) return run_count(n, oracle);
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kOk;
}
