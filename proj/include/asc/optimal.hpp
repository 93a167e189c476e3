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

// Exact optimal adaptive policies.
//
// optimal_cost() solves the Bellman recursion
//   V(psi) = 0                                          if f(psi) = Q
//   V(psi) = min_{e ∉ dom(psi)} c_e + E[V(psi ∪ (e, Φ_e)) | psi]   otherwise
// by memoized recursion over feasible partial realizations.
//
// brute_force_optimal() is the independent check: it lists every policy
// tree explicitly and evaluates each one against all ground assignments.
// It shares no code with the recursion above.

#ifndef ASC_OPTIMAL_HPP_
#define ASC_OPTIMAL_HPP_

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "asc/core_model.hpp"
#include "asc/policy.hpp"

namespace asc {

struct ValueEntry {
  double cost = 0.0;               // optimal remaining expected cost
  std::optional<ItemIndex> best;   // nullopt: terminal (f = Q)
};

class ValueTable {
 public:
  using Map =
      std::unordered_map<PartialRealization, ValueEntry, PartialRealizationHash>;

  explicit ValueTable(Map entries) : entries_(std::move(entries)) {}

  const ValueEntry* find(const PartialRealization& psi) const {
    auto it = entries_.find(psi);
    return it == entries_.end() ? nullptr : &it->second;
  }
  // Throws Error(kUndefinedEntry) when psi was never visited.
  const ValueEntry& at(const PartialRealization& psi) const;
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

 private:
  Map entries_;
};

struct OptimalResult {
  double cost = 0.0;  // V(∅)
  ValueTable table;
};

// Throws Error(kNotCoverable) if some reachable state cannot reach Q.
OptimalResult optimal_cost(const Instance& instance);

PolicyTree extract_policy(const ValueTable& table, const Instance& instance);

inline constexpr int kBruteForceMaxItems = 4;

// Minimum expected cost over every valid policy tree.
// Throws Error(kTooManyItems) above kBruteForceMaxItems.
double brute_force_optimal(const Instance& instance);

// p values on `grid` where the fixed order matches the optimum within 1e-9
// (dummy costs follow p). Used to record where a claimed optimal order holds.
std::vector<double> fixed_order_optimal_at(const Instance& instance,
                                           std::span<const std::string> order,
                                           std::span<const double> grid);

}  // namespace asc

#endif  // ASC_OPTIMAL_HPP_
