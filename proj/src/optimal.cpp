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

#include "asc/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "asc/errors.hpp"

namespace asc {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kChoiceTolerance = 1e-14;

class BellmanSolver {
 public:
  explicit BellmanSolver(const Instance& instance) : instance_(instance) {
    order_.resize(instance.num_items());
    for (ItemIndex e = 0; e < instance.num_items(); ++e) order_[e] = e;
    std::sort(order_.begin(), order_.end(), [&](ItemIndex a, ItemIndex b) {
      return instance.id(a) < instance.id(b);
    });
  }

  double value(const PartialRealization& psi) {
    if (auto it = memo_.find(psi); it != memo_.end()) return it->second.cost;
    if (instance_.utility().is_covered(psi)) {
      memo_.emplace(psi, ValueEntry{0.0, std::nullopt});
      return 0.0;
    }
    double mass[2][kMaxItems] = {};
    for (const FullRealization& r : instance_.realizations()) {
      if (!psi.consistent_with(r.ones)) continue;
      for (ItemIndex e = 0; e < instance_.num_items(); ++e) {
        mass[to_int(r.outcome(e))][e] += r.probability;
      }
    }
    double best = kInfinity;
    std::optional<ItemIndex> best_item;
    for (ItemIndex e : order_) {
      if (psi.observed(e)) continue;
      const double total = mass[0][e] + mass[1][e];
      double v = instance_.cost(e);
      for (Outcome o : kOutcomes) {
        const double w = mass[to_int(o)][e];
        if (w <= 0.0) continue;
        v += (w / total) * value(psi.with(e, o));
      }
      if (!std::isfinite(v)) continue;
      // Items are visited in id order, so a near-tie keeps the smaller id.
      if (!best_item || v < best - kChoiceTolerance * std::max(1.0, best)) {
        best = v;
        best_item = e;
      }
    }
    memo_.emplace(psi, ValueEntry{best, best_item});
    return best;
  }

  ValueTable::Map release() && { return std::move(memo_); }

 private:
  const Instance& instance_;
  std::vector<ItemIndex> order_;
  ValueTable::Map memo_;
};

}  // namespace

const ValueEntry& ValueTable::at(const PartialRealization& psi) const {
  if (const ValueEntry* entry = find(psi)) return *entry;
  throw Error(ErrorKind::kUndefinedEntry,
              "value table has no entry for this partial realization");
}

OptimalResult optimal_cost(const Instance& instance) {
  BellmanSolver solver(instance);
  const double v = solver.value(PartialRealization());
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::kNotCoverable,
                "some realization cannot reach Q under any policy");
  }
  return {v, ValueTable(std::move(solver).release())};
}

PolicyTree extract_policy(const ValueTable& table, const Instance& instance) {
  std::vector<PolicyTree::Node> nodes;
  auto visit = [&](auto&& self, const PartialRealization& psi) -> int {
    const ValueEntry& entry = table.at(psi);
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    if (!entry.best) return id;
    const ItemIndex e = *entry.best;
    nodes[id].item = e;
    for (Outcome o : kOutcomes) {
      const PartialRealization next = psi.with(e, o);
      if (instance.mass(next) <= 0.0) continue;
      const int child = self(self, next);
      nodes[id].child[to_int(o)] = child;
    }
    return id;
  };
  visit(visit, PartialRealization());
  return PolicyTree(std::move(nodes));
}

std::vector<double> fixed_order_optimal_at(const Instance& instance,
                                           std::span<const std::string> order,
                                           std::span<const double> grid) {
  std::vector<double> out;
  for (double p : grid) {
    const Instance at = instance.at_p(p);
    const double fixed = expected_cost(at, fixed_order_tree(at, order));
    if (std::abs(fixed - optimal_cost(at).cost) <= 1e-9) out.push_back(p);
  }
  return out;
}

}  // namespace asc
