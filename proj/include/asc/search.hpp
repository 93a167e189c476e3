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

// Worst-case greedy/optimal ratios over the OR-item family.
//
// A family member has k independent Ber(1-p) ground variables, n-1
// unit-cost items that each realize to 1 iff one of their ground variables
// does, and a dummy item "d" that always realizes to 1 at cost 1/(1-p).
// Members are deduplicated under permutations of the ground variables.

#ifndef ASC_SEARCH_HPP_
#define ASC_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asc/core_model.hpp"
#include "asc/policy.hpp"

namespace asc {

inline constexpr int kFamilyMaxGroundVars = 6;
inline constexpr int kFamilyMaxItems = 7;
inline constexpr int kWorstTieBreakMaxItems = 12;

struct FamilySpec {
  int k = 0;
  int n = 0;
  // n-1 ground-variable masks (bit i-1 for X_i), sorted ascending.
  std::vector<std::uint32_t> trigger_sets;

  // Unit items are named a, b, c, e, f, g, ... ("d" is the dummy).
  Instance instantiate(double p) const;
  // "{1,2};{1,3};{2,4}"
  std::string describe() const;
  bool has_duplicate_triggers() const;

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

// Lexicographically smallest sorted mask list over all k! relabelings.
FamilySpec canonicalize(int k, std::vector<std::uint32_t> trigger_sets);

// Every multiset of n-1 non-empty subsets of {1..k}, one per symmetry
// class, in ascending canonical order. Throws Error(kGuardExceeded) beyond
// k ≤ 6, n ≤ 7.
std::vector<FamilySpec> generate_family(int k, int n);

struct RatioPoint {
  double p = 0.0;
  double greedy_cost = 0.0;
  double opt_cost = 0.0;
  double rho = 1.0;
};

// Greedy (under `tiebreak`) against the optimum at p.
RatioPoint ratio_at(const Instance& instance, double p,
                    const TieBreak& tiebreak);

struct WorstTieBreak {
  TieBreak tiebreak;
  double greedy_cost = 0.0;
  std::size_t distinct_trees = 0;  // greedy trees reachable by some priority
};

// The priority that maximizes greedy expected cost at p. Exact: explores
// every distinct greedy tree some priority can produce.
WorstTieBreak worst_tiebreak(const Instance& instance, double p);

struct MaximizeOptions {
  double lo = 0.01;
  double hi = 0.99;
  double step = 0.001;
  double tolerance = 1e-6;
};

struct RatioMaximum {
  RatioPoint point;
  TieBreak tiebreak;
};

// Grid scan then golden-section refinement inside the best grid bracket;
// the adversarial tie-break is recomputed at every probe.
RatioMaximum maximize_over_p(const Instance& instance,
                             const MaximizeOptions& options = {});

struct SearchReport {
  FamilySpec instance;
  double p_star = 0.0;
  double greedy_cost = 0.0;
  double opt_cost = 0.0;
  double rho = 1.0;
  std::vector<std::string> tiebreak;  // item ids, highest priority first
};

struct SearchOptions {
  MaximizeOptions maximize;
  int threads = 0;  // 0: OpenMP default
};

struct SearchResult {
  std::vector<SearchReport> reports;  // rho descending, then canonical spec
  std::size_t members = 0;  // evaluated, after pruning
  std::size_t pruned_duplicates = 0;
};

// Every member with k = k_max and n = 2..n_max (members with fewer used
// variables already appear at k_max). Members with repeated trigger sets
// are skipped and counted: the repeat is never selected after its twin.
// Members are evaluated in parallel with OpenMP.
SearchResult search_worst(int k_max, int n_max,
                          const SearchOptions& options = {});
SearchResult search_worst_serial(int k_max, int n_max,
                                 const SearchOptions& options = {});

// maximize_over_p for one member, packaged as a report.
SearchReport evaluate_member(const FamilySpec& spec,
                             const MaximizeOptions& options = {});

// (p, greedy, opt, rho) at each grid point, evaluated in parallel. Greedy
// uses `tiebreak` when given, otherwise the adversarial one at each p.
std::vector<RatioPoint> sweep(const Instance& instance,
                              const std::vector<double>& grid,
                              const std::optional<TieBreak>& tiebreak = {},
                              int threads = 0);

}  // namespace asc

#endif  // ASC_SEARCH_HPP_
