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

// Instances of min-cost adaptive-submodular cover with binary item outcomes.
//
// An item's outcome is either the OR of a set of independent Bernoulli
// ground variables or identically 1 (the dummy item). The joint item
// distribution is the push-forward of the ground product measure; ground
// assignments that induce the same item-outcome vector are merged, so a
// FullRealization is identified by its item outcomes alone.
//
// Instances can also be built from an explicit joint table over item
// outcome vectors, which lets tests use arbitrary correlated
// distributions without a Bernoulli model.

#ifndef ASC_CORE_MODEL_HPP_
#define ASC_CORE_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "asc/realization.hpp"
#include "asc/utility.hpp"

namespace asc {

inline constexpr int kMaxGroundVars = 24;

struct GroundVar {
  int index = 0;  // 1-based, as in instance files
  double success_prob = 0.5;
};

// Outcome 1 iff any listed ground variable is 1.
struct OrOf {
  std::vector<int> vars;
};

struct AlwaysOne {};

// Outcome given by the instance's explicit joint table.
struct FromJointTable {};

using Trigger = std::variant<OrOf, AlwaysOne, FromJointTable>;

// A fixed positive cost, or the family's dummy cost 1/(1-p).
struct ItemCost {
  static ItemCost fixed(double value) { return {value, false}; }
  static ItemCost dummy() { return {0.0, true}; }

  double value = 1.0;
  bool is_dummy = false;
};

struct Item {
  std::string id;
  ItemCost cost;
  Trigger trigger;
};

struct FullRealization {
  std::uint32_t ones = 0;  // bit e set iff item e realizes to 1
  double probability = 0.0;

  Outcome outcome(ItemIndex e) const {
    return ((ones >> e) & 1u) ? Outcome::kOne : Outcome::kZero;
  }
  // The realization as a partial realization over `num_items` items.
  PartialRealization as_partial(int num_items) const;
};

class Instance {
 public:
  // Bernoulli-OR model. Every OrOf index must name a ground variable.
  // `p` regenerates dummy costs and is stored for at_p().
  static Instance bernoulli(std::vector<GroundVar> ground_vars,
                            std::vector<Item> items, double p,
                            Utility utility = Utility::hit_one());

  // Explicit joint distribution over item-outcome vectors. Every item must
  // use FromJointTable or AlwaysOne; probabilities must sum to 1.
  static Instance from_joint_table(std::vector<Item> items,
                                   std::vector<FullRealization> outcomes,
                                   Utility utility);

  int num_items() const { return static_cast<int>(items_.size()); }
  const std::vector<Item>& items() const { return items_; }
  const Item& item(ItemIndex e) const { return items_[e]; }
  const std::string& id(ItemIndex e) const { return items_[e].id; }
  double cost(ItemIndex e) const { return costs_[e]; }
  std::span<const double> costs() const { return costs_; }
  std::optional<ItemIndex> find(const std::string& id) const;
  // Throws Error(kInvalidInstance) for unknown ids.
  ItemIndex index_of(const std::string& id) const;
  std::uint32_t all_items_mask() const;

  const std::vector<GroundVar>& ground_vars() const { return ground_vars_; }
  bool has_ground_model() const { return joint_table_ == false; }
  // Ground-variable mask of an OrOf item (bit i-1 for X_i), 0 otherwise.
  std::uint32_t trigger_mask(ItemIndex e) const;

  double p() const { return p_; }
  const Utility& utility() const { return utility_; }

  // Positive-probability item-outcome vectors, ordered by `ones`.
  const std::vector<FullRealization>& realizations() const {
    return realizations_;
  }

  // Pr[psi ⪯ Φ].
  double mass(const PartialRealization& psi) const;

  // Same structure with every ground variable at Ber(1-p) and dummy costs
  // recomputed. Only valid for the Bernoulli model.
  Instance at_p(double p) const;
  Instance with_costs_scaled(double factor) const;
  Instance without_item(const std::string& id) const;

 private:
  Instance() = default;
  void finalize();

  std::vector<GroundVar> ground_vars_;
  std::vector<Item> items_;
  std::vector<double> costs_;
  double p_ = 0.0;
  double cost_scale_ = 1.0;
  Utility utility_ = Utility::hit_one();
  bool joint_table_ = false;
  std::vector<FullRealization> realizations_;
};

// Every distinct positive-probability item-outcome vector with its exact
// probability. Throws Error(kGroundSetTooLarge) above kMaxGroundVars.
std::vector<FullRealization> enumerate_realizations(const Instance& instance);

// Every psi with Pr[psi ⪯ Φ] > 0, sorted by the PartialRealization order.
std::vector<PartialRealization> feasible_partials(const Instance& instance);

using RealizationEvent = std::function<bool(const FullRealization&)>;

// Pr[event | psi ⪯ Φ]. Throws Error(kConditioningOnNull) if Pr[psi ⪯ Φ] = 0.
double posterior_prob(const Instance& instance, const PartialRealization& psi,
                      const RealizationEvent& event);

// Pr[Φ_e = o | psi ⪯ Φ].
double outcome_prob(const Instance& instance, const PartialRealization& psi,
                    ItemIndex e, Outcome o);

// Δ(e|psi) = Σ_o Pr[Φ_e=o | psi] (f(psi ∪ (e,o)) - f(psi)).
// Throws kItemAlreadyObserved if e ∈ dom(psi), kConditioningOnNull if psi is
// infeasible.
double marginal_benefit(const Instance& instance, ItemIndex e,
                        const PartialRealization& psi);

}  // namespace asc

#endif  // ASC_CORE_MODEL_HPP_
