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

// Shared oracles and generators for the test suites. Nothing here calls
// into the enumeration or posterior code under test.

#ifndef ASC_TESTS_SUPPORT_HPP_
#define ASC_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "asc/core_model.hpp"
#include "asc/search.hpp"

namespace asc::testing {

// Closed forms for the gap instance.
inline double paper_opt(double p) { return 1 + p * p + p * p * p * p / (1 - p); }
inline double paper_greedy(double p) { return paper_opt(p) + p * p * p; }

// p = 0.01, 0.02, ..., 0.99 built from integers.
inline std::vector<double> percent_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 99; ++i) out.push_back(i / 100.0);
  return out;
}

inline std::vector<double> tenth_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
  return out;
}

struct GroundWorld {
  std::uint32_t item_ones;
  double weight;
};

// One entry per ground assignment (no merging), item outcomes derived from
// the triggers directly.
inline std::vector<GroundWorld> ground_worlds(const Instance& instance) {
  std::vector<GroundWorld> out;
  const auto& vars = instance.ground_vars();
  const int k = static_cast<int>(vars.size());
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    double w = 1.0;
    for (int i = 0; i < k; ++i) {
      w *= ((a >> i) & 1u) ? vars[i].success_prob : 1.0 - vars[i].success_prob;
    }
    std::uint32_t ones = 0;
    for (ItemIndex e = 0; e < instance.num_items(); ++e) {
      const Trigger& t = instance.item(e).trigger;
      if (std::holds_alternative<AlwaysOne>(t)) ones |= 1u << e;
      if (const auto* ors = std::get_if<OrOf>(&t)) {
        for (int v : ors->vars) {
          if ((a >> (v - 1)) & 1u) ones |= 1u << e;
        }
      }
    }
    out.push_back({ones, w});
  }
  return out;
}

// Pr[event | psi] by summing over ground assignments.
template <typename Event>
double ground_posterior(const Instance& instance, const PartialRealization& psi,
                        Event&& event) {
  double total = 0.0, hit = 0.0;
  for (const GroundWorld& w : ground_worlds(instance)) {
    if ((w.item_ones & psi.domain_mask()) != psi.ones_mask()) continue;
    total += w.weight;
    if (event(w.item_ones)) hit += w.weight;
  }
  return hit / total;
}

// A random member of the OR family (not canonicalized).
inline FamilySpec random_spec(std::mt19937& rng, int max_k, int max_n) {
  std::uniform_int_distribution<int> pick_k(1, max_k);
  std::uniform_int_distribution<int> pick_n(2, max_n);
  FamilySpec spec;
  spec.k = pick_k(rng);
  spec.n = pick_n(rng);
  std::uniform_int_distribution<std::uint32_t> pick_mask(1, (1u << spec.k) - 1);
  for (int i = 0; i < spec.n - 1; ++i) spec.trigger_sets.push_back(pick_mask(rng));
  return spec;
}

// Random partial realization over n items.
inline PartialRealization random_partial(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1);
  return PartialRealization::from_masks(bits(rng), bits(rng));
}

inline ItemIndex item(const Instance& instance, const char* id) {
  return instance.index_of(id);
}

// Partial realization from (id, outcome) pairs.
inline PartialRealization partial(
    const Instance& instance,
    std::initializer_list<std::pair<const char*, int>> pairs) {
  PartialRealization psi;
  for (const auto& [id, o] : pairs) {
    psi = psi.with(instance.index_of(id), o ? Outcome::kOne : Outcome::kZero);
  }
  return psi;
}

}  // namespace asc::testing

#endif  // ASC_TESTS_SUPPORT_HPP_
