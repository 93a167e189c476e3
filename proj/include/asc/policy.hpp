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

#ifndef ASC_POLICY_HPP_
#define ASC_POLICY_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asc/core_model.hpp"

namespace asc {

// Two greedy ratios closer than this are treated as tied.
inline constexpr double kRatioTieTolerance = 1e-9;

// Total order over item positions; earlier wins a greedy tie.
class TieBreak {
 public:
  // Instance (file) order.
  static TieBreak instance_order(const Instance& instance);
  // Must name every item exactly once.
  static TieBreak from_ids(const Instance& instance,
                           std::span<const std::string> ids);
  static TieBreak from_positions(const Instance& instance,
                                 std::vector<ItemIndex> priority);

  const std::vector<ItemIndex>& priority() const { return priority_; }
  int rank(ItemIndex e) const { return rank_[e]; }
  std::vector<std::string> ids(const Instance& instance) const;

  friend bool operator==(const TieBreak&, const TieBreak&) = default;

 private:
  std::vector<ItemIndex> priority_;
  std::vector<int> rank_;
};

// Decision tree over observations. Node 0 is the root; a leaf selects
// nothing. Only outcome branches with positive probability are stored.
class PolicyTree {
 public:
  static constexpr ItemIndex kLeaf = -1;
  static constexpr int kNoChild = -1;

  struct Node {
    ItemIndex item = kLeaf;
    std::array<int, 2> child = {kNoChild, kNoChild};
  };

  explicit PolicyTree(std::vector<Node> nodes);

  const Node& root() const { return nodes_.front(); }
  const Node& node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool is_leaf(int i) const { return nodes_[i].item == kLeaf; }

  // Items selected while every observed outcome is 0.
  std::vector<ItemIndex> zeros_path() const;

  friend bool operator==(const PolicyTree&, const PolicyTree&);

 private:
  std::vector<Node> nodes_;
};

bool operator==(const PolicyTree::Node& a, const PolicyTree::Node& b);

struct GreedyCandidate {
  ItemIndex item = 0;
  double benefit = 0.0;  // Δ(e|psi)
  double ratio = 0.0;    // Δ(e|psi) / c_e
};

// Ratios of every item outside `selected`, in instance order.
std::vector<GreedyCandidate> greedy_ratios(const Instance& instance,
                                           const PartialRealization& psi,
                                           std::uint32_t selected);

// Items within kRatioTieTolerance of the best ratio, in instance order.
std::vector<ItemIndex> greedy_ties(const Instance& instance,
                                   const PartialRealization& psi,
                                   std::uint32_t selected);

// argmax Δ(e|psi)/c_e over unselected items, ties to the earliest in
// `tiebreak`. Throws Error(kNoItemsLeft) when every item is selected.
ItemIndex greedy_step(const Instance& instance, const PartialRealization& psi,
                      std::uint32_t selected, const TieBreak& tiebreak);

// Adaptive greedy unrolled over every reachable outcome branch.
// Throws Error(kNotCoverable) when a branch runs out of items uncovered.
PolicyTree build_greedy_tree(const Instance& instance,
                             const TieBreak& tiebreak);

// Selects items in `order`, stopping as soon as the utility reaches Q.
// Throws Error(kNotCoverable) if some realization exhausts the order.
PolicyTree fixed_order_tree(const Instance& instance,
                            std::span<const ItemIndex> order);
PolicyTree fixed_order_tree(const Instance& instance,
                            std::span<const std::string> order);

struct PolicyPath {
  PartialRealization leaf;  // observations at the leaf
  double probability = 0.0;
  double cost = 0.0;
};

// Root-to-leaf paths with positive probability. Throws Error(kInvalidPolicy)
// if the tree repeats an item, stops before coverage, continues after
// coverage, or misses a reachable branch.
std::vector<PolicyPath> policy_paths(const Instance& instance,
                                     const PolicyTree& tree);

// Σ over paths of probability × cost.
double expected_cost(const Instance& instance, const PolicyTree& tree);

// Indented text rendering, one line per decision.
std::string render_tree(const Instance& instance, const PolicyTree& tree);

}  // namespace asc

#endif  // ASC_POLICY_HPP_
