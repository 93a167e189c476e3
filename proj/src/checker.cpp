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

#include "asc/checker.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <tuple>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace asc {
namespace {

constexpr double kNotApplicable = std::numeric_limits<double>::quiet_NaN();

// Worst violation first; equal violations resolve to the smallest
// (psi', psi, e), which makes the parallel merge order-independent.
bool worse(const SubmodularWitness& a, const SubmodularWitness& b) {
  const double va = a.delta_psi_prime - a.delta_psi;
  const double vb = b.delta_psi_prime - b.delta_psi;
  if (va != vb) return va > vb;
  return std::tie(a.psi_prime, a.psi, a.item) <
         std::tie(b.psi_prime, b.psi, b.item);
}

void offer(std::optional<SubmodularWitness>& best,
           const SubmodularWitness& candidate) {
  if (candidate.delta_psi_prime - candidate.delta_psi <= kSubmodularTolerance) {
    return;
  }
  if (!best || worse(candidate, *best)) best = candidate;
}

// Calls fn(psi) for every psi ⪯ psi_prime.
template <typename Fn>
void for_each_subrealization(const PartialRealization& psi_prime, Fn&& fn) {
  const std::uint32_t dom = psi_prime.domain_mask();
  std::uint32_t s = dom;
  while (true) {
    fn(psi_prime.restricted_to(s));
    if (s == 0) break;
    s = (s - 1) & dom;
  }
}

int thread_count(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace

MonotoneCheck check_monotone(const Instance& instance) {
  MonotoneCheck check;
  const Utility& f = instance.utility();
  for (const PartialRealization& larger : feasible_partials(instance)) {
    const int f_larger = f.evaluate(larger);
    for (ItemIndex e = 0; e < instance.num_items(); ++e) {
      if (!larger.observed(e)) continue;
      const PartialRealization smaller =
          larger.restricted_to(larger.domain_mask() & ~(1u << e));
      ++check.pairs_checked;
      const int f_smaller = f.evaluate(smaller);
      if (f_smaller > f_larger && !check.witness) {
        check.pass = false;
        check.witness = MonotoneWitness{smaller, larger, f_smaller, f_larger};
      }
    }
  }
  return check;
}

MonotoneCheck check_monotone_all_pairs(const Instance& instance) {
  MonotoneCheck check;
  const Utility& f = instance.utility();
  for (const PartialRealization& larger : feasible_partials(instance)) {
    const int f_larger = f.evaluate(larger);
    for_each_subrealization(larger, [&](const PartialRealization& smaller) {
      ++check.pairs_checked;
      const int f_smaller = f.evaluate(smaller);
      if (f_smaller > f_larger && !check.witness) {
        check.pass = false;
        check.witness = MonotoneWitness{smaller, larger, f_smaller, f_larger};
      }
    });
  }
  return check;
}

CoverableCheck check_coverable(const Instance& instance) {
  CoverableCheck check;
  const Utility& f = instance.utility();
  for (const FullRealization& r : instance.realizations()) {
    ++check.pairs_checked;
    const int value = f.evaluate(r.as_partial(instance.num_items()));
    if (value != f.q_max() && !check.witness) {
      check.pass = false;
      check.witness = CoverableWitness{r, value};
    }
  }
  return check;
}

SubmodularCheck check_adaptive_submodular(const Instance& instance,
                                          int threads) {
  const std::vector<PartialRealization> feasible = feasible_partials(instance);
  const int count = static_cast<int>(feasible.size());
  const int n = instance.num_items();
  std::unordered_map<PartialRealization, int, PartialRealizationHash> index;
  index.reserve(feasible.size());
  for (int i = 0; i < count; ++i) index.emplace(feasible[i], i);

  // delta[i * n + e] = Δ(e | feasible[i]).
  std::vector<double> delta(static_cast<std::size_t>(count) * n, kNotApplicable);
  const int nt = thread_count(threads);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
  for (int i = 0; i < count; ++i) {
    try {
      for (ItemIndex e = 0; e < n; ++e) {
        if (!feasible[i].observed(e)) {
          delta[static_cast<std::size_t>(i) * n + e] =
              marginal_benefit(instance, e, feasible[i]);
        }
      }
    } catch (...) {
#pragma omp critical(asc_submodular_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SubmodularCheck check;
  std::size_t pairs = 0;
#pragma omp parallel num_threads(nt) reduction(+ : pairs)
  {
    std::optional<SubmodularWitness> local;
#pragma omp for schedule(dynamic, 16)
    for (int j = 0; j < count; ++j) {
      const PartialRealization& psi_prime = feasible[j];
      const double* d_prime = &delta[static_cast<std::size_t>(j) * n];
      for_each_subrealization(psi_prime, [&](const PartialRealization& psi) {
        ++pairs;
        const double* d = &delta[static_cast<std::size_t>(index.at(psi)) * n];
        for (ItemIndex e = 0; e < n; ++e) {
          if (psi_prime.observed(e)) continue;
          offer(local, SubmodularWitness{psi, psi_prime, e, d[e], d_prime[e]});
        }
      });
    }
#pragma omp critical(asc_submodular_merge)
    {
      if (local) offer(check.witness, *local);
    }
  }
  check.pairs_checked = pairs;
  check.pass = !check.witness.has_value();
  return check;
}

SubmodularCheck check_adaptive_submodular_serial(const Instance& instance) {
  SubmodularCheck check;
  for (const PartialRealization& psi_prime : feasible_partials(instance)) {
    for_each_subrealization(psi_prime, [&](const PartialRealization& psi) {
      ++check.pairs_checked;
      for (ItemIndex e = 0; e < instance.num_items(); ++e) {
        if (psi_prime.observed(e)) continue;
        offer(check.witness,
              SubmodularWitness{psi, psi_prime, e,
                                marginal_benefit(instance, e, psi),
                                marginal_benefit(instance, e, psi_prime)});
      }
    });
  }
  check.pass = !check.witness.has_value();
  return check;
}

CheckReport check_all(const Instance& instance, int threads) {
  CheckReport report;
  report.monotone = check_monotone(instance);
  report.coverable = check_coverable(instance);
  report.adaptive_submodular = check_adaptive_submodular(instance, threads);
  return report;
}

}  // namespace asc
