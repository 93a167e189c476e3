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

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "asc/checker.hpp"
#include "asc/instance_io.hpp"
#include "asc/search.hpp"
#include "support.hpp"

namespace asc {
namespace {

using testing::item;

// Two independent fair items; the table utility assigns values per
// feasible partial realization.
Instance two_coins(const std::function<int(const PartialRealization&)>& f, int q) {
  std::vector<GroundVar> vars = {{1, 0.5}, {2, 0.5}};
  std::vector<Item> items = {{"a", ItemCost::fixed(1.0), OrOf{{1}}},
                             {"b", ItemCost::fixed(1.0), OrOf{{2}}}};
  const Instance base = Instance::bernoulli(vars, items, 0.5);
  UtilityTable table;
  for (const auto& psi : feasible_partials(base)) table[psi] = f(psi);
  return Instance::bernoulli(vars, items, 0.5, Utility::table(table, q));
}

TEST_CASE("gap instance satisfies all three properties") {
  for (double p : testing::tenth_grid()) {
    const CheckReport report = check_all(paper_instance(p));
    CHECK(report.monotone.pass);
    CHECK(report.coverable.pass);
    CHECK(report.adaptive_submodular.pass);
    CHECK(report.all_pass());
    CHECK(report.pairs_checked() > 0);
  }
}

struct Row {
  std::vector<std::pair<const char*, int>> psi;
  std::vector<std::pair<const char*, int>> psi_prime;
  const char* e;
  double (*before)(double);
  double (*after)(double);
};

PartialRealization build(const Instance& inst,
                         const std::vector<std::pair<const char*, int>>& pairs) {
  PartialRealization psi;
  for (const auto& [id, o] : pairs) {
    psi = psi.with(inst.index_of(id), o ? Outcome::kOne : Outcome::kZero);
  }
  return psi;
}

double one_minus_p2(double p) { return 1 - p * p; }
double one_minus_p(double p) { return 1 - p; }
double zero(double) { return 0.0; }

TEST_CASE("marginal benefits on the case table") {
  const std::vector<Row> rows = {
      {{}, {{"a", 0}}, "b", one_minus_p2, one_minus_p2},
      {{}, {{"a", 0}}, "c", one_minus_p2, one_minus_p},
      {{}, {{"c", 0}}, "a", one_minus_p2, one_minus_p},
      {{}, {{"a", 0}, {"b", 0}}, "c", one_minus_p2, zero},
      {{}, {{"a", 0}, {"c", 0}}, "b", one_minus_p2, one_minus_p},
      {{{"a", 0}}, {{"a", 0}, {"b", 0}}, "c", one_minus_p, zero},
      {{{"a", 0}}, {{"a", 0}, {"c", 0}}, "b", one_minus_p2, one_minus_p},
      // a and b swapped
      {{}, {{"b", 0}}, "a", one_minus_p2, one_minus_p2},
      {{}, {{"b", 0}}, "c", one_minus_p2, one_minus_p},
      {{}, {{"c", 0}}, "b", one_minus_p2, one_minus_p},
      {{}, {{"b", 0}, {"c", 0}}, "a", one_minus_p2, one_minus_p},
      {{{"b", 0}}, {{"b", 0}, {"a", 0}}, "c", one_minus_p, zero},
      {{{"b", 0}}, {{"b", 0}, {"c", 0}}, "a", one_minus_p2, one_minus_p},
  };
  for (double p : testing::percent_grid()) {
    const Instance inst = paper_instance(p);
    for (const Row& row : rows) {
      const ItemIndex e = item(inst, row.e);
      const double before = marginal_benefit(inst, e, build(inst, row.psi));
      const double after = marginal_benefit(inst, e, build(inst, row.psi_prime));
      CHECK(std::abs(before - row.before(p)) <= 1e-12);
      CHECK(std::abs(after - row.after(p)) <= 1e-12);
      CHECK(before >= after - kSubmodularTolerance);
    }
  }
}

TEST_CASE("non-monotone table utility is caught") {
  // f = 1 after (a,0) alone, 0 once b is also seen.
  const Instance inst = two_coins(
      [](const PartialRealization& psi) {
        return psi.size() == 1 && psi.observed(0) ? 1 : 0;
      },
      1);
  const MonotoneCheck check = check_monotone(inst);
  REQUIRE_FALSE(check.pass);
  REQUIRE(check.witness.has_value());
  const MonotoneWitness& w = *check.witness;
  CHECK(is_subrealization(w.smaller, w.larger));
  CHECK(w.f_smaller == evaluate(inst.utility(), w.smaller));
  CHECK(w.f_larger == evaluate(inst.utility(), w.larger));
  CHECK(w.f_smaller > w.f_larger);
  CHECK_FALSE(check_monotone_all_pairs(inst).pass);
}

TEST_CASE("conjunctive utility is not adaptive submodular") {
  // f = 1 once both items are seen at 1.
  const Instance inst = two_coins(
      [](const PartialRealization& psi) { return psi.ones_mask() == 0b11u ? 1 : 0; }, 1);
  const SubmodularCheck check = check_adaptive_submodular(inst);
  REQUIRE_FALSE(check.pass);
  REQUIRE(check.witness.has_value());
  const SubmodularWitness& w = *check.witness;
  CHECK(is_subrealization(w.psi, w.psi_prime));
  CHECK_FALSE(w.psi_prime.observed(w.item));
  CHECK(std::abs(marginal_benefit(inst, w.item, w.psi) - w.delta_psi) <= 1e-12);
  CHECK(std::abs(marginal_benefit(inst, w.item, w.psi_prime) - w.delta_psi_prime) <= 1e-12);
  CHECK(w.delta_psi_prime == doctest::Approx(0.5));
  CHECK(w.delta_psi == 0.0);
  // Smallest witness: psi empty, psi' = (a,1), e = b.
  CHECK(w.psi.empty());
  CHECK(w.psi_prime == PartialRealization::from_masks(0b01u, 0b01u));
  CHECK(w.item == 1);

  const SubmodularCheck serial = check_adaptive_submodular_serial(inst);
  CHECK(serial.pass == check.pass);
  CHECK(serial.witness->psi == w.psi);
  CHECK(serial.witness->psi_prime == w.psi_prime);
  CHECK(serial.witness->item == w.item);
  CHECK(serial.pairs_checked == check.pairs_checked);
}

TEST_CASE("dropping the dummy breaks coverability") {
  const Instance inst = paper_instance(0.7221).without_item("d");
  const CoverableCheck check = check_coverable(inst);
  REQUIRE_FALSE(check.pass);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->realization.ones == 0u);
  CHECK(check.witness->value == 0);
  CHECK(std::abs(check.witness->realization.probability - std::pow(0.7221, 4)) <= 1e-12);
  CHECK(check_monotone(inst).pass);
  CHECK(check_adaptive_submodular(inst).pass);
}

TEST_CASE("covering pairs agree with all pairs") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance hit = testing::random_spec(rng, 4, 4).instantiate(0.1 + 0.8 * u(rng));
    CHECK(check_monotone(hit).pass == check_monotone_all_pairs(hit).pass);
    // Random integer table utilities, mostly non-monotone.
    UtilityTable table;
    for (const auto& psi : feasible_partials(hit)) {
      table[psi] = psi.empty() ? 0 : static_cast<int>(u(rng) * 3);
    }
    const Instance rnd = Instance::bernoulli(hit.ground_vars(), hit.items(), hit.p(),
                                             Utility::table(table, 2));
    CHECK(check_monotone(rnd).pass == check_monotone_all_pairs(rnd).pass);
  }
}

TEST_CASE("parallel and serial submodularity checks agree") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance hit = testing::random_spec(rng, 4, 5).instantiate(0.1 + 0.8 * u(rng));
    UtilityTable table;
    for (const auto& psi : feasible_partials(hit)) {
      table[psi] = psi.empty() ? 0 : static_cast<int>(u(rng) * 2);
    }
    for (const Instance& inst :
         {hit, Instance::bernoulli(hit.ground_vars(), hit.items(), hit.p(),
                                   Utility::table(table, 1))}) {
      const SubmodularCheck par = check_adaptive_submodular(inst, 4);
      const SubmodularCheck ser = check_adaptive_submodular_serial(inst);
      CHECK(par.pass == ser.pass);
      CHECK(par.pairs_checked == ser.pairs_checked);
      REQUIRE(par.witness.has_value() == ser.witness.has_value());
      if (par.witness) {
        CHECK(par.witness->psi == ser.witness->psi);
        CHECK(par.witness->psi_prime == ser.witness->psi_prime);
        CHECK(par.witness->item == ser.witness->item);
        CHECK(std::abs(par.witness->delta_psi_prime - par.witness->delta_psi -
                       (ser.witness->delta_psi_prime - ser.witness->delta_psi)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("small family members pass every check") {
  for (int n = 2; n <= 4; ++n) {
    for (const FamilySpec& spec : generate_family(3, n)) {
      for (double p : {0.25, 0.5, 0.75}) {
        CHECK_MESSAGE(check_all(spec.instantiate(p)).all_pass(), spec.describe());
      }
    }
  }
}

}  // namespace
}  // namespace asc
