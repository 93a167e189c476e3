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

#include "asc/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "asc/errors.hpp"

namespace asc {
namespace {

constexpr int kMaxFeasibleEnumerationItems = 20;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidInstance, message);
}

std::vector<FullRealization> merge_outcomes(
    const std::map<std::uint32_t, double>& merged) {
  std::vector<FullRealization> out;
  out.reserve(merged.size());
  for (const auto& [ones, prob] : merged) {
    if (prob > 0.0) out.push_back({ones, prob});
  }
  return out;
}

}  // namespace

PartialRealization FullRealization::as_partial(int num_items) const {
  const std::uint32_t all =
      num_items >= 32 ? ~0u : ((1u << num_items) - 1u);
  return PartialRealization::from_masks(all, ones);
}

Instance Instance::bernoulli(std::vector<GroundVar> ground_vars,
                             std::vector<Item> items, double p,
                             Utility utility) {
  if (static_cast<int>(ground_vars.size()) > kMaxGroundVars) {
    throw Error(ErrorKind::kGroundSetTooLarge,
                std::to_string(ground_vars.size()) +
                    " ground variables exceed the enumeration limit of " +
                    std::to_string(kMaxGroundVars));
  }
  if (!(p >= 0.0 && p <= 1.0)) invalid("p must lie in [0, 1]");
  std::set<int> seen;
  for (const GroundVar& v : ground_vars) {
    if (!seen.insert(v.index).second) {
      invalid("duplicate ground variable index " + std::to_string(v.index));
    }
    if (!(v.success_prob >= 0.0 && v.success_prob <= 1.0)) {
      invalid("ground variable " + std::to_string(v.index) +
              " has success probability outside [0, 1]");
    }
  }
  for (const Item& item : items) {
    if (std::holds_alternative<FromJointTable>(item.trigger)) {
      invalid("item '" + item.id + "' needs an OR or always-one trigger");
    }
    if (const auto* ors = std::get_if<OrOf>(&item.trigger)) {
      if (ors->vars.empty()) invalid("item '" + item.id + "' has an empty OR");
      for (int v : ors->vars) {
        if (!seen.contains(v)) {
          invalid("item '" + item.id + "' references unknown ground variable " +
                  std::to_string(v));
        }
      }
    }
  }
  Instance inst;
  inst.ground_vars_ = std::move(ground_vars);
  inst.items_ = std::move(items);
  inst.p_ = p;
  inst.utility_ = std::move(utility);
  inst.finalize();
  return inst;
}

Instance Instance::from_joint_table(std::vector<Item> items,
                                    std::vector<FullRealization> outcomes,
                                    Utility utility) {
  Instance inst;
  inst.items_ = std::move(items);
  inst.utility_ = std::move(utility);
  inst.joint_table_ = true;
  for (const Item& item : inst.items_) {
    if (std::holds_alternative<OrOf>(item.trigger)) {
      invalid("item '" + item.id + "' cannot use an OR trigger in a joint table");
    }
    if (item.cost.is_dummy) {
      invalid("item '" + item.id + "' cannot use a dummy cost in a joint table");
    }
  }
  std::uint32_t always = 0;
  for (std::size_t e = 0; e < inst.items_.size(); ++e) {
    if (std::holds_alternative<AlwaysOne>(inst.items_[e].trigger)) {
      always |= 1u << e;
    }
  }
  std::map<std::uint32_t, double> merged;
  double total = 0.0;
  for (const FullRealization& r : outcomes) {
    if (!(r.probability >= 0.0)) invalid("negative joint-table probability");
    if (r.probability > 0.0 && (r.ones & always) != always) {
      invalid("joint table gives an always-one item outcome 0");
    }
    merged[r.ones] += r.probability;
    total += r.probability;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    invalid("joint-table probabilities sum to " + std::to_string(total));
  }
  inst.finalize();
  inst.realizations_ = merge_outcomes(merged);
  return inst;
}

void Instance::finalize() {
  if (items_.empty()) invalid("instance has no items");
  if (static_cast<int>(items_.size()) > kMaxItems) {
    invalid("instance has more than " + std::to_string(kMaxItems) + " items");
  }
  std::set<std::string> ids;
  costs_.clear();
  for (const Item& item : items_) {
    if (item.id.empty()) invalid("item with empty id");
    if (!ids.insert(item.id).second) invalid("duplicate item id '" + item.id + "'");
    double c = item.cost.value;
    if (item.cost.is_dummy) {
      if (!(p_ < 1.0)) invalid("dummy cost 1/(1-p) needs p < 1");
      c = 1.0 / (1.0 - p_);
    }
    c *= cost_scale_;
    if (!(c > 0.0) || !std::isfinite(c)) {
      invalid("item '" + item.id + "' must have a positive finite cost");
    }
    costs_.push_back(c);
  }
  if (!joint_table_) realizations_ = enumerate_realizations(*this);
}

std::optional<ItemIndex> Instance::find(const std::string& id) const {
  for (ItemIndex e = 0; e < num_items(); ++e) {
    if (items_[e].id == id) return e;
  }
  return std::nullopt;
}

ItemIndex Instance::index_of(const std::string& id) const {
  if (auto e = find(id)) return *e;
  invalid("unknown item id '" + id + "'");
}

std::uint32_t Instance::all_items_mask() const {
  return num_items() >= 32 ? ~0u : ((1u << num_items()) - 1u);
}

std::uint32_t Instance::trigger_mask(ItemIndex e) const {
  const auto* ors = std::get_if<OrOf>(&items_[e].trigger);
  if (ors == nullptr) return 0;
  std::uint32_t mask = 0;
  for (int v : ors->vars) {
    for (std::size_t i = 0; i < ground_vars_.size(); ++i) {
      if (ground_vars_[i].index == v) mask |= 1u << i;
    }
  }
  return mask;
}

double Instance::mass(const PartialRealization& psi) const {
  double total = 0.0;
  for (const FullRealization& r : realizations_) {
    if (psi.consistent_with(r.ones)) total += r.probability;
  }
  return total;
}

Instance Instance::at_p(double p) const {
  if (joint_table_) invalid("at_p needs a Bernoulli instance");
  std::vector<GroundVar> vars = ground_vars_;
  for (GroundVar& v : vars) v.success_prob = 1.0 - p;
  Instance inst = bernoulli(std::move(vars), items_, p, utility_);
  if (cost_scale_ != 1.0) {
    inst.cost_scale_ = cost_scale_;
    inst.finalize();
  }
  return inst;
}

Instance Instance::with_costs_scaled(double factor) const {
  if (!(factor > 0.0)) invalid("cost scale must be positive");
  Instance inst = *this;
  inst.cost_scale_ *= factor;
  for (double& c : inst.costs_) c *= factor;
  return inst;
}

Instance Instance::without_item(const std::string& id) const {
  const ItemIndex removed = index_of(id);
  std::vector<Item> items = items_;
  items.erase(items.begin() + removed);
  if (!joint_table_) {
    Instance inst = bernoulli(ground_vars_, std::move(items), p_, utility_);
    if (cost_scale_ != 1.0) return inst.with_costs_scaled(cost_scale_);
    return inst;
  }
  // Marginalize the removed item out of the joint table.
  std::vector<FullRealization> outcomes;
  const std::uint32_t low = (1u << removed) - 1u;
  for (const FullRealization& r : realizations_) {
    std::uint32_t ones = (r.ones & low) | ((r.ones >> (removed + 1)) << removed);
    outcomes.push_back({ones, r.probability});
  }
  return from_joint_table(std::move(items), std::move(outcomes), utility_);
}

std::vector<FullRealization> enumerate_realizations(const Instance& instance) {
  if (!instance.has_ground_model()) return instance.realizations();
  const auto& vars = instance.ground_vars();
  const int k = static_cast<int>(vars.size());
  if (k > kMaxGroundVars) {
    throw Error(ErrorKind::kGroundSetTooLarge,
                std::to_string(k) + " ground variables exceed the limit of " +
                    std::to_string(kMaxGroundVars));
  }
  const int n = instance.num_items();
  std::vector<std::uint32_t> triggers(n);
  std::uint32_t always = 0;
  for (ItemIndex e = 0; e < n; ++e) {
    triggers[e] = instance.trigger_mask(e);
    if (std::holds_alternative<AlwaysOne>(instance.item(e).trigger)) {
      always |= 1u << e;
    }
  }
  std::map<std::uint32_t, double> merged;
  const std::uint32_t assignments = 1u << k;
  for (std::uint32_t a = 0; a < assignments; ++a) {
    double prob = 1.0;
    for (int i = 0; i < k; ++i) {
      const double q = vars[i].success_prob;
      prob *= ((a >> i) & 1u) ? q : 1.0 - q;
    }
    if (prob == 0.0) continue;
    std::uint32_t ones = always;
    for (ItemIndex e = 0; e < n; ++e) {
      if (triggers[e] & a) ones |= 1u << e;
    }
    merged[ones] += prob;
  }
  return merge_outcomes(merged);
}

std::vector<PartialRealization> feasible_partials(const Instance& instance) {
  const int n = instance.num_items();
  if (n > kMaxFeasibleEnumerationItems) {
    throw Error(ErrorKind::kGuardExceeded,
                "feasible partial enumeration limited to " +
                    std::to_string(kMaxFeasibleEnumerationItems) + " items");
  }
  std::unordered_set<PartialRealization, PartialRealizationHash> seen;
  const std::uint32_t all = instance.all_items_mask();
  for (const FullRealization& r : instance.realizations()) {
    // Walk every submask of the item set.
    std::uint32_t s = all;
    while (true) {
      seen.insert(PartialRealization::from_masks(s, r.ones));
      if (s == 0) break;
      s = (s - 1) & all;
    }
  }
  std::vector<PartialRealization> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

double posterior_prob(const Instance& instance, const PartialRealization& psi,
                      const RealizationEvent& event) {
  double total = 0.0;
  double hit = 0.0;
  for (const FullRealization& r : instance.realizations()) {
    if (!psi.consistent_with(r.ones)) continue;
    total += r.probability;
    if (event(r)) hit += r.probability;
  }
  if (total <= 0.0) {
    throw Error(ErrorKind::kConditioningOnNull,
                "conditioning on a zero-probability partial realization");
  }
  return hit / total;
}

double outcome_prob(const Instance& instance, const PartialRealization& psi,
                    ItemIndex e, Outcome o) {
  double total = 0.0;
  double hit = 0.0;
  for (const FullRealization& r : instance.realizations()) {
    if (!psi.consistent_with(r.ones)) continue;
    total += r.probability;
    if (r.outcome(e) == o) hit += r.probability;
  }
  if (total <= 0.0) {
    throw Error(ErrorKind::kConditioningOnNull,
                "conditioning on a zero-probability partial realization");
  }
  return hit / total;
}

double marginal_benefit(const Instance& instance, ItemIndex e,
                        const PartialRealization& psi) {
  if (psi.observed(e)) {
    throw Error(ErrorKind::kItemAlreadyObserved,
                "item '" + instance.id(e) + "' already observed");
  }
  const Utility& f = instance.utility();
  const int base = f.evaluate(psi);
  double mass_by_outcome[2] = {0.0, 0.0};
  for (const FullRealization& r : instance.realizations()) {
    if (!psi.consistent_with(r.ones)) continue;
    mass_by_outcome[to_int(r.outcome(e))] += r.probability;
  }
  const double total = mass_by_outcome[0] + mass_by_outcome[1];
  if (total <= 0.0) {
    throw Error(ErrorKind::kConditioningOnNull,
                "conditioning on a zero-probability partial realization");
  }
  double delta = 0.0;
  for (Outcome o : kOutcomes) {
    const double w = mass_by_outcome[to_int(o)];
    if (w <= 0.0) continue;
    delta += (w / total) * (f.evaluate(psi.with(e, o)) - base);
  }
  return delta;
}

}  // namespace asc
