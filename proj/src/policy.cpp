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

#include "asc/policy.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "asc/errors.hpp"

namespace asc {
namespace {

[[noreturn]] void invalid_policy(const std::string& message) {
  throw Error(ErrorKind::kInvalidPolicy, message);
}

class TreeBuilder {
 public:
  int add_leaf() {
    nodes_.push_back({});
    return static_cast<int>(nodes_.size()) - 1;
  }
  int add_node(ItemIndex e) {
    nodes_.push_back({e, {PolicyTree::kNoChild, PolicyTree::kNoChild}});
    return static_cast<int>(nodes_.size()) - 1;
  }
  void set_child(int parent, Outcome o, int child) {
    nodes_[parent].child[to_int(o)] = child;
  }
  PolicyTree finish() && { return PolicyTree(std::move(nodes_)); }

 private:
  std::vector<PolicyTree::Node> nodes_;
};

// Expands `choose` over every reachable branch starting at psi.
template <typename Choose>
int expand(const Instance& instance, const PartialRealization& psi,
           TreeBuilder& builder, const Choose& choose) {
  if (instance.utility().is_covered(psi)) return builder.add_leaf();
  const ItemIndex e = choose(psi);
  const int id = builder.add_node(e);
  for (Outcome o : kOutcomes) {
    const PartialRealization next = psi.with(e, o);
    if (instance.mass(next) <= 0.0) continue;
    builder.set_child(id, o, expand(instance, next, builder, choose));
  }
  return id;
}

}  // namespace

TieBreak TieBreak::instance_order(const Instance& instance) {
  std::vector<ItemIndex> order(instance.num_items());
  for (ItemIndex e = 0; e < instance.num_items(); ++e) order[e] = e;
  return from_positions(instance, std::move(order));
}

TieBreak TieBreak::from_ids(const Instance& instance,
                            std::span<const std::string> ids) {
  std::vector<ItemIndex> order;
  order.reserve(ids.size());
  for (const std::string& id : ids) order.push_back(instance.index_of(id));
  return from_positions(instance, std::move(order));
}

TieBreak TieBreak::from_positions(const Instance& instance,
                                  std::vector<ItemIndex> priority) {
  const int n = instance.num_items();
  if (static_cast<int>(priority.size()) != n) {
    throw Error(ErrorKind::kInvalidInstance,
                "tie-break priority must list all " + std::to_string(n) +
                    " items");
  }
  TieBreak tb;
  tb.rank_.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    const ItemIndex e = priority[r];
    if (e < 0 || e >= n || tb.rank_[e] != -1) {
      throw Error(ErrorKind::kInvalidInstance,
                  "tie-break priority is not a permutation of the items");
    }
    tb.rank_[e] = r;
  }
  tb.priority_ = std::move(priority);
  return tb;
}

std::vector<std::string> TieBreak::ids(const Instance& instance) const {
  std::vector<std::string> out;
  for (ItemIndex e : priority_) out.push_back(instance.id(e));
  return out;
}

PolicyTree::PolicyTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) invalid_policy("policy tree has no nodes");
  for (const Node& node : nodes_) {
    for (int c : node.child) {
      if (c != kNoChild && (c <= 0 || c >= size())) {
        invalid_policy("policy tree child index out of range");
      }
      if (c != kNoChild && node.item == kLeaf) {
        invalid_policy("policy tree leaf has children");
      }
    }
  }
}

std::vector<ItemIndex> PolicyTree::zeros_path() const {
  std::vector<ItemIndex> path;
  int at = 0;
  while (at != kNoChild && !is_leaf(at)) {
    path.push_back(nodes_[at].item);
    at = nodes_[at].child[0];
  }
  return path;
}

bool operator==(const PolicyTree::Node& a, const PolicyTree::Node& b) {
  return a.item == b.item && a.child == b.child;
}

bool operator==(const PolicyTree& a, const PolicyTree& b) {
  return a.nodes_ == b.nodes_;
}

std::vector<GreedyCandidate> greedy_ratios(const Instance& instance,
                                           const PartialRealization& psi,
                                           std::uint32_t selected) {
  std::vector<GreedyCandidate> out;
  for (ItemIndex e = 0; e < instance.num_items(); ++e) {
    if ((selected >> e) & 1u) continue;
    const double benefit = marginal_benefit(instance, e, psi);
    out.push_back({e, benefit, benefit / instance.cost(e)});
  }
  return out;
}

std::vector<ItemIndex> greedy_ties(const Instance& instance,
                                   const PartialRealization& psi,
                                   std::uint32_t selected) {
  const auto candidates = greedy_ratios(instance, psi, selected);
  if (candidates.empty()) {
    throw Error(ErrorKind::kNoItemsLeft,
                "every item is selected but the utility is below Q");
  }
  double best = candidates.front().ratio;
  for (const auto& c : candidates) best = std::max(best, c.ratio);
  std::vector<ItemIndex> ties;
  for (const auto& c : candidates) {
    if (c.ratio >= best - kRatioTieTolerance) ties.push_back(c.item);
  }
  return ties;
}

ItemIndex greedy_step(const Instance& instance, const PartialRealization& psi,
                      std::uint32_t selected, const TieBreak& tiebreak) {
  const auto ties = greedy_ties(instance, psi, selected);
  return *std::min_element(ties.begin(), ties.end(),
                           [&](ItemIndex a, ItemIndex b) {
                             return tiebreak.rank(a) < tiebreak.rank(b);
                           });
}

PolicyTree build_greedy_tree(const Instance& instance,
                             const TieBreak& tiebreak) {
  TreeBuilder builder;
  const std::uint32_t all = instance.all_items_mask();
  expand(instance, PartialRealization(), builder,
         [&](const PartialRealization& psi) {
           if (psi.domain_mask() == all) {
             throw Error(ErrorKind::kNotCoverable,
                         "greedy exhausted every item without reaching Q");
           }
           return greedy_step(instance, psi, psi.domain_mask(), tiebreak);
         });
  return std::move(builder).finish();
}

PolicyTree fixed_order_tree(const Instance& instance,
                            std::span<const ItemIndex> order) {
  std::set<ItemIndex> seen;
  for (ItemIndex e : order) {
    if (e < 0 || e >= instance.num_items() || !seen.insert(e).second) {
      throw Error(ErrorKind::kInvalidInstance,
                  "fixed order must list distinct items of the instance");
    }
  }
  TreeBuilder builder;
  expand(instance, PartialRealization(), builder,
         [&](const PartialRealization& psi) {
           for (ItemIndex e : order) {
             if (!psi.observed(e)) return e;
           }
           throw Error(ErrorKind::kNotCoverable,
                       "fixed order exhausted without reaching Q");
         });
  return std::move(builder).finish();
}

PolicyTree fixed_order_tree(const Instance& instance,
                            std::span<const std::string> order) {
  std::vector<ItemIndex> positions;
  for (const std::string& id : order) positions.push_back(instance.index_of(id));
  return fixed_order_tree(instance, std::span<const ItemIndex>(positions));
}

std::vector<PolicyPath> policy_paths(const Instance& instance,
                                     const PolicyTree& tree) {
  std::vector<PolicyPath> out;
  const Utility& f = instance.utility();
  struct Frame {
    int node;
    PartialRealization psi;
    double cost;
  };
  std::vector<Frame> stack = {{0, PartialRealization(), 0.0}};
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    const PolicyTree::Node& node = tree.node(frame.node);
    if (node.item == PolicyTree::kLeaf) {
      if (!f.is_covered(frame.psi)) invalid_policy("leaf reached below Q");
      out.push_back({frame.psi, instance.mass(frame.psi), frame.cost});
      continue;
    }
    if (node.item < 0 || node.item >= instance.num_items()) {
      invalid_policy("node selects an unknown item");
    }
    if (f.is_covered(frame.psi)) invalid_policy("node continues after Q");
    if (frame.psi.observed(node.item)) {
      invalid_policy("item '" + instance.id(node.item) +
                     "' repeats on a path");
    }
    const double cost = frame.cost + instance.cost(node.item);
    // Push outcome 1 first so outcome 0 paths come out first.
    for (Outcome o : {Outcome::kOne, Outcome::kZero}) {
      const PartialRealization next = frame.psi.with(node.item, o);
      const int child = node.child[to_int(o)];
      const bool reachable = instance.mass(next) > 0.0;
      if (reachable && child == PolicyTree::kNoChild) {
        invalid_policy("reachable branch of '" + instance.id(node.item) +
                       "' has no subtree");
      }
      if (!reachable && child != PolicyTree::kNoChild) {
        invalid_policy("unreachable branch of '" + instance.id(node.item) +
                       "' has a subtree");
      }
      if (reachable) stack.push_back({child, next, cost});
    }
  }
  return out;
}

double expected_cost(const Instance& instance, const PolicyTree& tree) {
  double total = 0.0;
  for (const PolicyPath& path : policy_paths(instance, tree)) {
    total += path.probability * path.cost;
  }
  return total;
}

std::string render_tree(const Instance& instance, const PolicyTree& tree) {
  std::ostringstream out;
  auto visit = [&](auto&& self, int at, int depth) -> void {
    const PolicyTree::Node& node = tree.node(at);
    if (node.item == PolicyTree::kLeaf) {
      out << "covered\n";
      return;
    }
    out << "select " << instance.id(node.item) << "\n";
    for (Outcome o : kOutcomes) {
      const int child = node.child[to_int(o)];
      if (child == PolicyTree::kNoChild) continue;
      out << std::string(2 * (depth + 1), ' ') << instance.id(node.item) << "="
          << to_int(o) << ": ";
      self(self, child, depth + 1);
    }
  };
  visit(visit, 0, 0);
  return out.str();
}

}  // namespace asc
