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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "asc/errors.hpp"
#include "asc/instance_io.hpp"
#include "asc/policy.hpp"
#include "support.hpp"

namespace asc {
namespace {

using testing::item;
using testing::partial;

constexpr double kGap = 0.7221;

TieBreak priority(const Instance& inst, std::vector<std::string> ids) {
  return TieBreak::from_ids(inst, ids);
}

std::vector<std::string> ids(const Instance& inst,
                             const std::vector<ItemIndex>& items) {
  std::vector<std::string> out;
  for (ItemIndex e : items) out.push_back(inst.id(e));
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an asc::Error");
  return ErrorKind::kSchema;
}

TEST_CASE("greedy steps along the bad trace") {
  const Instance inst = paper_instance(kGap);
  const TieBreak cabd = priority(inst, {"c", "a", "b", "d"});
  auto step = [&](const PartialRealization& psi) {
    return inst.id(greedy_step(inst, psi, psi.domain_mask(), cabd));
  };
  CHECK(step({}) == "c");
  CHECK(step(partial(inst, {{"c", 0}})) == "a");
  CHECK(step(partial(inst, {{"c", 0}, {"a", 0}})) == "b");
  CHECK(step(partial(inst, {{"c", 0}, {"a", 0}, {"b", 0}})) == "d");
}

TEST_CASE("greedy ratio tables along the bad trace") {
  const double p = kGap;
  const Instance inst = paper_instance(p);
  auto ratios = [&](const PartialRealization& psi) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& c : greedy_ratios(inst, psi, psi.domain_mask())) {
      out.emplace_back(inst.id(c.item), c.ratio);
    }
    return out;
  };
  const auto step1 = ratios({});
  REQUIRE(step1.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(step1[i].second - (1 - p * p)) <= 1e-12);
  CHECK(std::abs(step1[3].second - (1 - p)) <= 1e-12);

  for (const auto& psi : {partial(inst, {{"c", 0}}),
                          partial(inst, {{"c", 0}, {"a", 0}})}) {
    for (const auto& [id, ratio] : ratios(psi)) {
      CHECK(std::abs(ratio - (1 - p)) <= 1e-12);
    }
  }
  CHECK(ratios(partial(inst, {{"c", 0}})).size() == 3);
  CHECK(ratios(partial(inst, {{"c", 0}, {"a", 0}})).size() == 2);
}

TEST_CASE("greedy tree under the bad priority") {
  const Instance inst = paper_instance(kGap);
  const PolicyTree tree = build_greedy_tree(inst, priority(inst, {"c", "a", "b", "d"}));
  CHECK(ids(inst, tree.zeros_path()) == std::vector<std::string>{"c", "a", "b", "d"});
  // Every 1-outcome ends the run.
  for (int i = 0; i < tree.size(); ++i) {
    if (tree.is_leaf(i)) continue;
    const int one = tree.node(i).child[1];
    REQUIRE(one != PolicyTree::kNoChild);
    CHECK(tree.is_leaf(one));
  }
  CHECK(render_tree(inst, tree) ==
        "select c\n"
        "  c=0: select a\n"
        "    a=0: select b\n"
        "      b=0: select d\n"
        "        d=1: covered\n"
        "      b=1: covered\n"
        "    a=1: covered\n"
        "  c=1: covered\n");
}

TEST_CASE("greedy tree under priority a,b,c,d never selects c") {
  // Replayed by hand: ∅ ties a,b,c at 1-p² (a wins); after (a,0) b has
  // 1-p² against 1-p for c and d; after (a,0),(b,0) every X is 0, so
  // Δ(c) = 0 and d is left.
  const Instance inst = paper_instance(kGap);
  const PolicyTree tree = build_greedy_tree(inst, priority(inst, {"a", "b", "c", "d"}));
  CHECK(ids(inst, tree.zeros_path()) == std::vector<std::string>{"a", "b", "d"});
  CHECK(marginal_benefit(inst, item(inst, "c"),
                         partial(inst, {{"a", 0}, {"b", 0}})) == 0.0);
  for (int i = 0; i < tree.size(); ++i) CHECK(tree.node(i).item != item(inst, "c"));
}

TEST_CASE("single always-one item gives a depth-one tree") {
  const Instance inst =
      Instance::bernoulli({}, {{"d", ItemCost::fixed(3.0), AlwaysOne{}}}, 0.5);
  const PolicyTree greedy = build_greedy_tree(inst, TieBreak::instance_order(inst));
  CHECK(greedy.size() == 2);
  CHECK(greedy.root().item == 0);
  CHECK(greedy.root().child[0] == PolicyTree::kNoChild);
  const std::vector<std::string> order = {"d"};
  CHECK(fixed_order_tree(inst, std::span<const std::string>(order)) == greedy);
  CHECK(expected_cost(inst, greedy) == 3.0);
}

TEST_CASE("fixed orders") {
  const Instance inst = paper_instance(0.5);
  const std::vector<std::string> abd = {"a", "b", "d"};
  const PolicyTree tree = fixed_order_tree(inst, std::span<const std::string>(abd));
  CHECK(ids(inst, tree.zeros_path()) == abd);
  CHECK(expected_cost(inst, tree) == doctest::Approx(1.375).epsilon(1e-15));

  const std::vector<std::string> abc = {"a", "b", "c"};
  CHECK(kind_of([&] {
          fixed_order_tree(inst, std::span<const std::string>(abc));
        }) == ErrorKind::kNotCoverable);
}

TEST_CASE("closed forms over the percent grid") {
  for (double p : testing::percent_grid()) {
    const Instance inst = paper_instance(p);
    const std::vector<std::string> abd = {"a", "b", "d"};
    const double fixed =
        expected_cost(inst, fixed_order_tree(inst, std::span<const std::string>(abd)));
    CHECK(std::abs(fixed - testing::paper_opt(p)) <= 1e-12);
    const double greedy = expected_cost(
        inst, build_greedy_tree(inst, priority(inst, {"c", "a", "b", "d"})));
    CHECK(std::abs(greedy - testing::paper_greedy(p)) <= 1e-12);
  }
}

TEST_CASE("path probabilities sum to one") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> pick_p(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_spec(rng, 5, 6).instantiate(pick_p(rng));
    std::vector<ItemIndex> order(inst.num_items());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const TieBreak tb = TieBreak::from_positions(inst, order);
    double total = 0.0;
    for (const auto& path : policy_paths(inst, build_greedy_tree(inst, tb))) {
      total += path.probability;
      CHECK(inst.utility().is_covered(path.leaf));
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("greedy choice is invariant under uniform cost scaling") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> pick_p(0.05, 0.95);
  std::uniform_real_distribution<double> pick_scale(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_spec(rng, 4, 6).instantiate(pick_p(rng));
    const Instance scaled = inst.with_costs_scaled(pick_scale(rng));
    const TieBreak tb = TieBreak::instance_order(inst);
    for (const auto& psi : feasible_partials(inst)) {
      if (inst.utility().is_covered(psi) || psi.domain_mask() == inst.all_items_mask()) {
        continue;
      }
      CHECK(greedy_step(inst, psi, psi.domain_mask(), tb) ==
            greedy_step(scaled, psi, psi.domain_mask(), tb));
    }
  }
}

TEST_CASE("greedy errors") {
  const Instance inst = paper_instance(0.5);
  CHECK(kind_of([&] {
          greedy_step(inst, {}, inst.all_items_mask(), TieBreak::instance_order(inst));
        }) == ErrorKind::kNoItemsLeft);
  const Instance uncovered = inst.without_item("d");
  CHECK(kind_of([&] {
          build_greedy_tree(uncovered, TieBreak::instance_order(uncovered));
        }) == ErrorKind::kNotCoverable);
  CHECK_THROWS_AS(priority(inst, {"a", "b", "c"}), Error);
  CHECK_THROWS_AS(priority(inst, {"a", "b", "c", "c"}), Error);
}

TEST_CASE("invalid trees are rejected by evaluation") {
  const Instance inst = paper_instance(0.5);
  using Node = PolicyTree::Node;
  // Stops after a = 0 without coverage.
  const PolicyTree early({Node{0, {1, 2}}, Node{}, Node{}});
  CHECK(kind_of([&] { expected_cost(inst, early); }) == ErrorKind::kInvalidPolicy);
  // Selects a twice.
  const PolicyTree repeat({Node{0, {1, 2}}, Node{0, {3, 4}}, Node{}, Node{}, Node{}});
  CHECK(kind_of([&] { expected_cost(inst, repeat); }) == ErrorKind::kInvalidPolicy);
  // d's 0-branch is unreachable; a subtree there is malformed.
  const PolicyTree dead({Node{3, {1, 2}}, Node{}, Node{}});
  CHECK(kind_of([&] { expected_cost(inst, dead); }) == ErrorKind::kInvalidPolicy);
  // Missing the reachable a = 1 branch.
  const PolicyTree missing({Node{0, {1, PolicyTree::kNoChild}}, Node{3, {PolicyTree::kNoChild, 2}}, Node{}});
  CHECK(kind_of([&] { expected_cost(inst, missing); }) == ErrorKind::kInvalidPolicy);
}

}  // namespace
}  // namespace asc
