// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asc/checker.hpp"
#include "asc/errors.hpp"
#include "asc/instance_io.hpp"
#include "asc/optimal.hpp"
#include "asc/policy.hpp"
#include "asc/search.hpp"

namespace asc::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceSource {
  std::string path;
  std::string builtin;
  std::optional<double> p;

  void attach(CLI::App& app) {
    auto* file = app.add_option("--instance", path, "Instance JSON file");
    auto* named = app.add_option("--builtin", builtin, "Built-in instance (paper)");
    file->excludes(named);
    app.add_option("--p", p, "Failure probability p, overrides the file")
        ->check(CLI::Range(0.0, 1.0));
  }

  std::string label() const {
    return builtin.empty() ? path : "builtin:" + builtin;
  }

  Instance load(std::optional<double> p_value) const {
    if (path.empty() && builtin.empty()) {
      throw UsageError("one of --instance or --builtin is required");
    }
    if (!builtin.empty()) {
      return builtin_instance(builtin, p_value.value_or(0.7221));
    }
    return load_instance(path, p_value);
  }
  Instance load() const { return load(p); }
};

std::vector<ItemIndex> positions(const Instance& instance,
                                 const std::vector<std::string>& ids) {
  std::vector<ItemIndex> out;
  for (const std::string& id : ids) {
    auto e = instance.find(id);
    if (!e) throw UsageError("unknown item id '" + id + "'");
    out.push_back(*e);
  }
  return out;
}

TieBreak parse_priority(const Instance& instance,
                        const std::vector<std::string>& ids) {
  if (ids.empty()) return TieBreak::instance_order(instance);
  try {
    return TieBreak::from_positions(instance, positions(instance, ids));
  } catch (const Error& e) {
    throw UsageError(std::string("--priority: ") + e.what());
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> ids_of(const Instance& instance,
                                const std::vector<ItemIndex>& items) {
  std::vector<std::string> out;
  for (ItemIndex e : items) out.push_back(instance.id(e));
  return out;
}

json tree_to_json(const Instance& instance, const PolicyTree& tree, int at) {
  const PolicyTree::Node& node = tree.node(at);
  if (node.item == PolicyTree::kLeaf) return {{"covered", true}};
  json out = {{"select", instance.id(node.item)}};
  for (Outcome o : kOutcomes) {
    const int child = node.child[to_int(o)];
    if (child != PolicyTree::kNoChild) {
      out[std::to_string(to_int(o))] = tree_to_json(instance, tree, child);
    }
  }
  return out;
}

double number(double value) { return std::stod(format_number(value)); }

// p_i = i / (grid + 1), i = 1..grid.
std::vector<double> grid_points(int grid) {
  std::vector<double> out;
  for (int i = 1; i <= grid; ++i) out.push_back(static_cast<double>(i) / (grid + 1));
  return out;
}

int env_threads() {
  const char* value = std::getenv("ASC_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 1) {
    throw UsageError("ASC_THREADS must be a positive integer");
  }
  return static_cast<int>(parsed);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << contents;
}

int greedy_verb(const InstanceSource& source,
                const std::vector<std::string>& priority, bool as_json,
                std::ostream& out) {
  const Instance instance = source.load();
  const TieBreak tiebreak = parse_priority(instance, priority);
  const PolicyTree tree = build_greedy_tree(instance, tiebreak);
  const double cost = expected_cost(instance, tree);
  const auto path = ids_of(instance, tree.zeros_path());
  if (as_json) {
    out << json{{"instance", source.label()},
                {"p", number(instance.p())},
                {"priority", tiebreak.ids(instance)},
                {"tree", tree_to_json(instance, tree, 0)},
                {"zeros_path", path},
                {"expected_cost", number(cost)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "instance: " << source.label() << " (p = " << format_number(instance.p())
      << ")\n";
  out << "priority: " << join(tiebreak.ids(instance), " ") << "\n";
  out << render_tree(instance, tree);
  out << "all-zeros path: " << join(path, " ") << "\n";
  out << "expected cost: " << format_number(cost) << "\n";
  return kExitOk;
}

int eval_verb(const InstanceSource& source,
              const std::vector<std::string>& order, bool as_json,
              std::ostream& out) {
  const Instance instance = source.load();
  const auto items = positions(instance, order);
  const PolicyTree tree =
      fixed_order_tree(instance, std::span<const ItemIndex>(items));
  const double cost = expected_cost(instance, tree);
  if (as_json) {
    out << json{{"instance", source.label()},
                {"p", number(instance.p())},
                {"order", order},
                {"expected_cost", number(cost)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "instance: " << source.label() << " (p = " << format_number(instance.p())
      << ")\n";
  out << "order: " << join(order, " ") << "\n";
  out << "expected cost: " << format_number(cost) << "\n";
  return kExitOk;
}

int opt_verb(const InstanceSource& source, bool show_tree, bool as_json,
             std::ostream& out) {
  const Instance instance = source.load();
  const OptimalResult result = optimal_cost(instance);
  const PolicyTree tree = extract_policy(result.table, instance);
  if (as_json) {
    json doc = {{"instance", source.label()},
                {"p", number(instance.p())},
                {"optimal_cost", number(result.cost)},
                {"states", result.table.size()}};
    if (show_tree) doc["tree"] = tree_to_json(instance, tree, 0);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "instance: " << source.label() << " (p = " << format_number(instance.p())
      << ")\n";
  out << "optimal cost: " << format_number(result.cost) << "\n";
  if (show_tree) out << render_tree(instance, tree);
  return kExitOk;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

int check_verb(const InstanceSource& source, std::optional<int> grid,
               bool as_json, std::ostream& out) {
  std::vector<std::optional<double>> probes;
  if (grid) {
    if (*grid < 1) throw UsageError("--grid must be positive");
    for (double p : grid_points(*grid)) probes.push_back(p);
  } else {
    probes.push_back(source.p);
  }
  const int threads = env_threads();
  bool all_pass = true;
  json reports = json::array();
  for (const auto& p : probes) {
    const Instance instance = source.load(p);
    const CheckReport report = check_all(instance, threads);
    all_pass = all_pass && report.all_pass();
    const json doc = check_report_to_json(instance, report);
    if (as_json) {
      reports.push_back(doc);
      continue;
    }
    if (probes.size() > 1) out << "p = " << format_number(instance.p()) << "\n";
    out << "monotone: " << verdict(report.monotone.pass) << "\n";
    out << "coverable: " << verdict(report.coverable.pass) << "\n";
    out << "adaptive_submodular: " << verdict(report.adaptive_submodular.pass)
        << "\n";
    for (const char* axiom : {"monotone", "coverable", "adaptive_submodular"}) {
      if (doc[axiom].contains("witness")) {
        out << axiom << " witness: " << doc[axiom]["witness"].dump() << "\n";
      }
    }
  }
  if (as_json) {
    json doc = {{"instance", source.label()}, {"pass", all_pass}};
    doc["reports"] = std::move(reports);
    out << doc.dump(2) << "\n";
  }
  return all_pass ? kExitOk : kExitFailure;
}

int sweep_verb(const InstanceSource& source, int grid,
               const std::vector<std::string>& priority,
               const std::string& csv_path, bool as_json, std::ostream& out) {
  if (grid < 1) throw UsageError("--grid must be positive");
  const Instance instance = source.load();
  std::optional<TieBreak> tiebreak;
  if (!priority.empty()) tiebreak = parse_priority(instance, priority);
  const auto rows = sweep(instance, grid_points(grid), tiebreak, env_threads());
  std::ostringstream csv;
  csv << "p,greedy,opt,rho\n";
  json table = json::array();
  for (const RatioPoint& row : rows) {
    csv << format_number(row.p) << "," << format_number(row.greedy_cost) << ","
        << format_number(row.opt_cost) << "," << format_number(row.rho) << "\n";
    table.push_back({{"p", number(row.p)},
                     {"greedy", number(row.greedy_cost)},
                     {"opt", number(row.opt_cost)},
                     {"rho", number(row.rho)}});
  }
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  if (as_json) {
    out << json{{"instance", source.label()},
                {"tiebreak", tiebreak ? "fixed" : "adversarial"},
                {"rows", std::move(table)}}
               .dump(2)
        << "\n";
  } else if (csv_path.empty()) {
    out << csv.str();
  } else {
    out << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  }
  return kExitOk;
}

int search_verb(int k, int n, int top, double step, const std::string& csv_path,
                bool as_json, std::ostream& out, std::ostream& err) {
  if (top < 0) throw UsageError("--top must be non-negative");
  SearchOptions options;
  options.threads = env_threads();
  options.maximize.step = step;
  const SearchResult result = search_worst(k, n, options);
  if (result.pruned_duplicates > 0) {
    err << "pruned " << result.pruned_duplicates
        << " members with repeated trigger sets\n";
  }
  const std::size_t shown =
      std::min(result.reports.size(), static_cast<std::size_t>(top));
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "trigger_sets,p_star,greedy_cost,opt_cost,rho,tiebreak\n";
    for (const SearchReport& r : result.reports) {
      csv << csv_quote(r.instance.describe()) << "," << format_number(r.p_star)
          << "," << format_number(r.greedy_cost) << ","
          << format_number(r.opt_cost) << "," << format_number(r.rho) << ","
          << join(r.tiebreak, " ") << "\n";
    }
    write_file(csv_path, csv.str());
  }
  if (as_json) {
    json reports = json::array();
    for (std::size_t i = 0; i < shown; ++i) {
      reports.push_back(search_report_to_json(result.reports[i]));
    }
    out << json{{"k", k},
                {"n", n},
                {"members", result.members},
                {"pruned_duplicates", result.pruned_duplicates},
                {"reports", std::move(reports)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "searched " << result.members << " members (k = " << k << ", n <= " << n
      << ")\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const SearchReport& r = result.reports[i];
    out << "rho " << format_number(r.rho) << "  p* " << format_number(r.p_star)
        << "  greedy " << format_number(r.greedy_cost) << "  opt "
        << format_number(r.opt_cost) << "  n " << r.instance.n << "  "
        << r.instance.describe() << "  tiebreak " << join(r.tiebreak, " ")
        << "\n";
  }
  return kExitOk;
}

std::vector<char*> argv_of(std::vector<std::string>& storage) {
  std::vector<char*> out;
  for (std::string& s : storage) out.push_back(s.data());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact analysis of min-cost adaptive-submodular cover", "asc"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON document");

  InstanceSource greedy_src, eval_src, opt_src, check_src, sweep_src;
  std::vector<std::string> greedy_priority, sweep_priority, order;
  bool show_tree = false;
  std::optional<int> check_grid;
  int sweep_grid = 99;
  std::string sweep_csv, search_csv;
  int search_k = 4, search_n = 4, search_top = 10;
  double search_step = 0.001;

  auto* greedy = app.add_subcommand("greedy", "Adaptive greedy policy tree");
  greedy_src.attach(*greedy);
  greedy->add_option("--priority", greedy_priority, "Tie-break order, e.g. c,a,b,d")
      ->delimiter(',');
  greedy->add_flag("--json", as_json, "Emit a single JSON document");

  auto* eval = app.add_subcommand("eval", "Expected cost of a fixed order");
  eval_src.attach(*eval);
  eval->add_option("--order", order, "Selection order, e.g. a,b,d")
      ->delimiter(',')
      ->required();
  eval->add_flag("--json", as_json, "Emit a single JSON document");

  auto* opt = app.add_subcommand("opt", "Exact optimal adaptive policy");
  opt_src.attach(*opt);
  opt->add_flag("--show-tree", show_tree, "Print the optimal policy tree");
  opt->add_flag("--json", as_json, "Emit a single JSON document");

  auto* check = app.add_subcommand("check", "Verify the cover axioms");
  check_src.attach(*check);
  auto* grid_opt =
      check->add_option("--grid", check_grid, "Check at p = i/(N+1), i = 1..N");
  grid_opt->excludes(check->get_option("--p"));
  check->add_flag("--json", as_json, "Emit a single JSON document");

  auto* sweep_cmd = app.add_subcommand("sweep", "Greedy/optimal ratio over p");
  sweep_src.attach(*sweep_cmd);
  sweep_cmd->add_option("--grid", sweep_grid, "Grid size N, p = i/(N+1)");
  sweep_cmd->add_option("--csv", sweep_csv, "Write rows to this CSV file");
  sweep_cmd->add_option("--priority", sweep_priority,
                        "Fixed tie-break (default: adversarial per p)")
      ->delimiter(',');
  sweep_cmd->add_flag("--json", as_json, "Emit a single JSON document");

  auto* search = app.add_subcommand("search", "Worst-case ratio over the family");
  search->add_option("--k", search_k, "Ground variables")->required();
  search->add_option("--n", search_n, "Maximum items, dummy included")->required();
  search->add_option("--top", search_top, "Reports to print");
  search->add_option("--csv", search_csv, "Write every report to this CSV file");
  search->add_option("--step", search_step, "p grid step before refinement")
      ->check(CLI::Range(1e-6, 0.5));
  search->add_flag("--json", as_json, "Emit a single JSON document");

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("asc");
  std::vector<char*> argv = argv_of(storage);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr
                                                  : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  try {
    if (greedy->parsed()) return greedy_verb(greedy_src, greedy_priority, as_json, out);
    if (eval->parsed()) return eval_verb(eval_src, order, as_json, out);
    if (opt->parsed()) return opt_verb(opt_src, show_tree, as_json, out);
    if (check->parsed()) return check_verb(check_src, check_grid, as_json, out);
    if (sweep_cmd->parsed()) {
      return sweep_verb(sweep_src, sweep_grid, sweep_priority, sweep_csv, as_json,
                        out);
    }
    return search_verb(search_k, search_n, search_top, search_step, search_csv,
                       as_json, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    const bool usage = e.kind() == ErrorKind::kSchema ||
                       e.kind() == ErrorKind::kInvalidInstance ||
                       e.kind() == ErrorKind::kGuardExceeded;
    return usage ? kExitUsage : kExitFailure;
  }
}

}  // namespace asc::cli
