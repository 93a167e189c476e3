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

// Exhaustive oracle for the optimal expected cost. Kept apart from the
// Bellman solver: it builds its own world list from the ground variables
// and scores complete policy trees one at a time.

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "asc/errors.hpp"
#include "asc/optimal.hpp"

namespace asc {
namespace {

struct World {
  std::uint32_t ones;
  double weight;
};

std::vector<World> ground_worlds(const Instance& instance) {
  std::vector<World> worlds;
  if (!instance.has_ground_model()) {
    for (const FullRealization& r : instance.realizations()) {
      worlds.push_back({r.ones, r.probability});
    }
    return worlds;
  }
  const auto& vars = instance.ground_vars();
  const int k = static_cast<int>(vars.size());
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    double weight = 1.0;
    for (int i = 0; i < k; ++i) {
      weight *= ((a >> i) & 1u) ? vars[i].success_prob
                                : 1.0 - vars[i].success_prob;
    }
    if (weight == 0.0) continue;
    std::uint32_t ones = 0;
    for (ItemIndex e = 0; e < instance.num_items(); ++e) {
      const Trigger& t = instance.item(e).trigger;
      if (std::holds_alternative<AlwaysOne>(t)) {
        ones |= 1u << e;
      } else if (const auto* ors = std::get_if<OrOf>(&t)) {
        for (int v : ors->vars) {
          for (int i = 0; i < k; ++i) {
            if (vars[i].index == v && ((a >> i) & 1u)) ones |= 1u << e;
          }
        }
      }
    }
    worlds.push_back({ones, weight});
  }
  return worlds;
}

struct Tree {
  // -1 leaf (covered), -2 branch never reached.
  ItemIndex item = -1;
  std::shared_ptr<const Tree> child[2];
};
using TreePtr = std::shared_ptr<const Tree>;

class TreeEnumerator {
 public:
  TreeEnumerator(const Instance& instance, const std::vector<World>& worlds)
      : instance_(instance), worlds_(worlds) {}

  std::vector<TreePtr> all(const PartialRealization& psi,
                           const std::vector<int>& live) {
    if (live.empty()) return {std::make_shared<Tree>(Tree{-2, {}})};
    if (instance_.utility().is_covered(psi)) {
      return {std::make_shared<Tree>(Tree{-1, {}})};
    }
    std::vector<TreePtr> out;
    for (ItemIndex e = 0; e < instance_.num_items(); ++e) {
      if (psi.observed(e)) continue;
      std::vector<int> split[2];
      for (int w : live) split[(worlds_[w].ones >> e) & 1u].push_back(w);
      const auto zero = all(psi.with(e, Outcome::kZero), split[0]);
      const auto one = all(psi.with(e, Outcome::kOne), split[1]);
      for (const TreePtr& t0 : zero) {
        for (const TreePtr& t1 : one) {
          out.push_back(std::make_shared<Tree>(Tree{e, {t0, t1}}));
        }
      }
    }
    return out;
  }

 private:
  const Instance& instance_;
  const std::vector<World>& worlds_;
};

double score(const Instance& instance, const std::vector<World>& worlds,
             const Tree& root) {
  double total = 0.0;
  for (const World& w : worlds) {
    double cost = 0.0;
    const Tree* at = &root;
    while (at->item >= 0) {
      cost += instance.cost(at->item);
      at = at->child[(w.ones >> at->item) & 1u].get();
    }
    total += w.weight * cost;
  }
  return total;
}

}  // namespace

double brute_force_optimal(const Instance& instance) {
  if (instance.num_items() > kBruteForceMaxItems) {
    throw Error(ErrorKind::kTooManyItems,
                "brute-force oracle limited to " +
                    std::to_string(kBruteForceMaxItems) + " items");
  }
  const std::vector<World> worlds = ground_worlds(instance);
  std::vector<int> live(worlds.size());
  for (std::size_t w = 0; w < worlds.size(); ++w) live[w] = static_cast<int>(w);
  TreeEnumerator enumerator(instance, worlds);
  const auto trees = enumerator.all(PartialRealization(), live);
  if (trees.empty()) {
    throw Error(ErrorKind::kNotCoverable, "no policy tree reaches Q");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const TreePtr& t : trees) best = std::min(best, score(instance, worlds, *t));
  return best;
}

}  // namespace asc
