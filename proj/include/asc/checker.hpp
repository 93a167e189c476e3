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

// Exhaustive verification of monotonicity, coverability and adaptive
// submodularity over the feasible partial realizations of an instance.
// Each failed check carries a witness that can be re-evaluated with
// evaluate() / marginal_benefit().

#ifndef ASC_CHECKER_HPP_
#define ASC_CHECKER_HPP_

#include <cstddef>
#include <optional>

#include "asc/core_model.hpp"

namespace asc {

inline constexpr double kSubmodularTolerance = 1e-9;

struct MonotoneWitness {
  PartialRealization smaller;
  PartialRealization larger;
  int f_smaller = 0;
  int f_larger = 0;
};

struct CoverableWitness {
  FullRealization realization;
  int value = 0;
};

struct SubmodularWitness {
  PartialRealization psi;
  PartialRealization psi_prime;
  ItemIndex item = 0;
  double delta_psi = 0.0;        // Δ(e|psi)
  double delta_psi_prime = 0.0;  // Δ(e|psi'), exceeds delta_psi on failure
};

template <typename Witness>
struct AxiomCheck {
  bool pass = true;
  std::optional<Witness> witness;
  std::size_t pairs_checked = 0;
};

using MonotoneCheck = AxiomCheck<MonotoneWitness>;
using CoverableCheck = AxiomCheck<CoverableWitness>;
using SubmodularCheck = AxiomCheck<SubmodularWitness>;

struct CheckReport {
  MonotoneCheck monotone;
  CoverableCheck coverable;
  SubmodularCheck adaptive_submodular;

  bool all_pass() const {
    return monotone.pass && coverable.pass && adaptive_submodular.pass;
  }
  std::size_t pairs_checked() const {
    return monotone.pairs_checked + coverable.pairs_checked +
           adaptive_submodular.pairs_checked;
  }
};

// Covering pairs only (psi' = psi plus one observation); sufficient by
// transitivity.
MonotoneCheck check_monotone(const Instance& instance);
// Every feasible pair psi ⪯ psi'. Reference for the covering-pair reduction.
MonotoneCheck check_monotone_all_pairs(const Instance& instance);

CoverableCheck check_coverable(const Instance& instance);

// Every feasible pair psi ⪯ psi' and e ∉ dom(psi'); fails when
// Δ(e|psi') > Δ(e|psi) + kSubmodularTolerance and reports the largest
// violation, ties going to the smallest (psi', psi, e). psi' is scanned
// in parallel with OpenMP; `threads` = 0 keeps the OpenMP default.
SubmodularCheck check_adaptive_submodular(const Instance& instance,
                                          int threads = 0);
// Single-threaded reference with no Δ cache.
SubmodularCheck check_adaptive_submodular_serial(const Instance& instance);

CheckReport check_all(const Instance& instance, int threads = 0);

}  // namespace asc

#endif  // ASC_CHECKER_HPP_
