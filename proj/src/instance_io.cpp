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

#include "asc/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <utility>

#include "asc/errors.hpp"

namespace asc {
namespace {

using nlohmann::json;

class SchemaContext {
 public:
  explicit SchemaContext(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field,
                         const std::string& problem) const {
    throw Error(ErrorKind::kSchema, source_ + ": " + field + ": " + problem);
  }

  void only_keys(const json& object, const std::string& field,
                 const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : object.items()) {
      if (!allowed.contains(key)) {
        fail(field.empty() ? key : field + "." + key, "unknown field");
      }
    }
  }

 private:
  std::string source_;
};

// Values rounded to 12 significant digits, so JSON output carries the same
// precision as the text output.
double rounded(double value) { return std::stod(format_number(value)); }

Item parse_item(const json& node, const std::string& field, int ground_vars,
                const SchemaContext& ctx) {
  if (!node.is_object()) ctx.fail(field, "expected an object");
  ctx.only_keys(node, field, {"id", "cost", "or_of", "always_one"});

  Item item;
  if (!node.contains("id") || !node["id"].is_string() ||
      node["id"].get<std::string>().empty()) {
    ctx.fail(field + ".id", "expected a non-empty string");
  }
  item.id = node["id"].get<std::string>();

  if (!node.contains("cost")) ctx.fail(field + ".cost", "missing");
  const json& cost = node["cost"];
  if (cost.is_string()) {
    if (cost.get<std::string>() != "dummy") {
      ctx.fail(field + ".cost", "expected a number or \"dummy\"");
    }
    item.cost = ItemCost::dummy();
  } else if (cost.is_number()) {
    const double value = cost.get<double>();
    if (!(value > 0.0)) ctx.fail(field + ".cost", "must be positive");
    item.cost = ItemCost::fixed(value);
  } else {
    ctx.fail(field + ".cost", "expected a number or \"dummy\"");
  }

  const bool has_or = node.contains("or_of");
  bool always = false;
  if (node.contains("always_one")) {
    if (!node["always_one"].is_boolean()) {
      ctx.fail(field + ".always_one", "expected a boolean");
    }
    always = node["always_one"].get<bool>();
  }
  if (has_or == always) {
    ctx.fail(field, "needs exactly one of \"or_of\" or \"always_one\": true");
  }
  if (always) {
    item.trigger = AlwaysOne{};
    return item;
  }
  const json& ors = node["or_of"];
  if (!ors.is_array() || ors.empty()) {
    ctx.fail(field + ".or_of", "expected a non-empty array");
  }
  OrOf trigger;
  for (std::size_t i = 0; i < ors.size(); ++i) {
    const std::string sub = field + ".or_of[" + std::to_string(i) + "]";
    if (!ors[i].is_number_integer()) ctx.fail(sub, "expected an integer");
    const int v = ors[i].get<int>();
    if (v < 1 || v > ground_vars) {
      ctx.fail(sub, "ground variable " + std::to_string(v) +
                        " outside 1.." + std::to_string(ground_vars));
    }
    trigger.vars.push_back(v);
  }
  item.trigger = std::move(trigger);
  return item;
}

}  // namespace

Instance parse_instance(const json& doc, const std::string& source,
                        std::optional<double> p_override) {
  const SchemaContext ctx(source);
  if (!doc.is_object()) ctx.fail("<root>", "expected an object");
  ctx.only_keys(doc, "", {"p", "ground_vars", "items", "utility"});

  double p = 0.0;
  if (p_override) {
    p = *p_override;
  } else {
    if (!doc.contains("p") || !doc["p"].is_number()) {
      ctx.fail("p", "expected a number");
    }
    p = doc["p"].get<double>();
  }
  if (doc.contains("p") && !doc["p"].is_number()) {
    ctx.fail("p", "expected a number");
  }
  if (!(p >= 0.0 && p < 1.0)) ctx.fail("p", "must lie in [0, 1)");

  if (!doc.contains("ground_vars") || !doc["ground_vars"].is_number_integer()) {
    ctx.fail("ground_vars", "expected an integer");
  }
  const int k = doc["ground_vars"].get<int>();
  if (k < 0 || k > kMaxGroundVars) {
    ctx.fail("ground_vars", "must lie in 0.." + std::to_string(kMaxGroundVars));
  }

  if (doc.contains("utility")) {
    if (!doc["utility"].is_string() ||
        doc["utility"].get<std::string>() != "hit_one") {
      ctx.fail("utility", "only \"hit_one\" is supported");
    }
  }

  if (!doc.contains("items") || !doc["items"].is_array() ||
      doc["items"].empty()) {
    ctx.fail("items", "expected a non-empty array");
  }
  std::vector<Item> items;
  std::set<std::string> ids;
  const json& list = doc["items"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "items[" + std::to_string(i) + "]";
    Item item = parse_item(list[i], field, k, ctx);
    if (!ids.insert(item.id).second) {
      ctx.fail(field + ".id", "duplicate id '" + item.id + "'");
    }
    items.push_back(std::move(item));
  }
  if (static_cast<int>(items.size()) > kMaxItems) {
    ctx.fail("items", "at most " + std::to_string(kMaxItems) + " items");
  }

  std::vector<GroundVar> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({i, 1.0 - p});
  try {
    return Instance::bernoulli(std::move(vars), std::move(items), p);
  } catch (const Error& e) {
    ctx.fail("<instance>", e.what());
  }
}

Instance load_instance(const std::string& path,
                       std::optional<double> p_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kSchema, path + ": file not found or unreadable");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kSchema, path + ": invalid JSON: " + e.what());
  }
  return parse_instance(doc, path, p_override);
}

json instance_to_json(const Instance& instance) {
  if (!instance.has_ground_model()) {
    throw Error(ErrorKind::kSchema,
                "joint-table instances have no file representation");
  }
  if (instance.utility().kind() != UtilityKind::kHitOne) {
    throw Error(ErrorKind::kSchema,
                "table utilities have no file representation");
  }
  json items = json::array();
  for (const Item& item : instance.items()) {
    json node;
    node["id"] = item.id;
    if (item.cost.is_dummy) {
      node["cost"] = "dummy";
    } else {
      node["cost"] = item.cost.value;
    }
    if (const auto* ors = std::get_if<OrOf>(&item.trigger)) {
      node["or_of"] = ors->vars;
    } else {
      node["always_one"] = true;
    }
    items.push_back(std::move(node));
  }
  return {{"p", instance.p()},
          {"ground_vars", instance.ground_vars().size()},
          {"utility", "hit_one"},
          {"items", std::move(items)}};
}

Instance paper_instance(double p) {
  std::vector<GroundVar> vars;
  for (int i = 1; i <= 4; ++i) vars.push_back({i, 1.0 - p});
  std::vector<Item> items = {
      {"a", ItemCost::fixed(1.0), OrOf{{1, 2}}},
      {"b", ItemCost::fixed(1.0), OrOf{{3, 4}}},
      {"c", ItemCost::fixed(1.0), OrOf{{1, 3}}},
      {"d", ItemCost::dummy(), AlwaysOne{}},
  };
  return Instance::bernoulli(std::move(vars), std::move(items), p);
}

Instance builtin_instance(const std::string& name, double p) {
  if (name != "paper") {
    throw Error(ErrorKind::kSchema, "unknown builtin instance '" + name + "'");
  }
  return paper_instance(p);
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_partial(const Instance& instance,
                           const PartialRealization& psi) {
  std::string out = "{";
  bool first = true;
  for (ItemIndex e = 0; e < instance.num_items(); ++e) {
    if (!psi.observed(e)) continue;
    if (!first) out += ',';
    out += "(" + instance.id(e) + "," + std::to_string(to_int(psi.outcome(e))) +
           ")";
    first = false;
  }
  return out + "}";
}

json partial_to_json(const Instance& instance, const PartialRealization& psi) {
  json out = json::array();
  for (ItemIndex e = 0; e < instance.num_items(); ++e) {
    if (psi.observed(e)) out.push_back({instance.id(e), to_int(psi.outcome(e))});
  }
  return out;
}

json check_report_to_json(const Instance& instance, const CheckReport& report) {
  json out;
  out["p"] = rounded(instance.p());
  json& mono = out["monotone"];
  mono["pass"] = report.monotone.pass;
  mono["pairs_checked"] = report.monotone.pairs_checked;
  if (const auto& w = report.monotone.witness) {
    mono["witness"] = {{"psi", partial_to_json(instance, w->smaller)},
                       {"psi_prime", partial_to_json(instance, w->larger)},
                       {"f_psi", w->f_smaller},
                       {"f_psi_prime", w->f_larger}};
  }
  json& cover = out["coverable"];
  cover["pass"] = report.coverable.pass;
  cover["realizations_checked"] = report.coverable.pairs_checked;
  if (const auto& w = report.coverable.witness) {
    cover["witness"] = {
        {"phi", partial_to_json(instance,
                                w->realization.as_partial(instance.num_items()))},
        {"probability", rounded(w->realization.probability)},
        {"f_phi", w->value}};
  }
  json& sub = out["adaptive_submodular"];
  sub["pass"] = report.adaptive_submodular.pass;
  sub["pairs_checked"] = report.adaptive_submodular.pairs_checked;
  if (const auto& w = report.adaptive_submodular.witness) {
    sub["witness"] = {{"psi", partial_to_json(instance, w->psi)},
                      {"psi_prime", partial_to_json(instance, w->psi_prime)},
                      {"item", instance.id(w->item)},
                      {"delta_psi", rounded(w->delta_psi)},
                      {"delta_psi_prime", rounded(w->delta_psi_prime)}};
  }
  return out;
}

json search_report_to_json(const SearchReport& report) {
  return {{"trigger_sets", report.instance.describe()},
          {"k", report.instance.k},
          {"n", report.instance.n},
          {"p_star", rounded(report.p_star)},
          {"greedy_cost", rounded(report.greedy_cost)},
          {"opt_cost", rounded(report.opt_cost)},
          {"rho", rounded(report.rho)},
          {"tiebreak", report.tiebreak}};
}

}  // namespace asc
