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

#include "asc/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "asc/errors.hpp"
#include "asc/optimal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace asc {
namespace {

constexpr double kCostTieTolerance = 1e-12;

int thread_count(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// mask -> relabelled mask for every permutation of k ground variables.
using PermutationTable = std::vector<std::array<std::uint8_t, 64>>;

const PermutationTable& permutation_table(int k) {
  static const std::array<PermutationTable, kFamilyMaxGroundVars + 1> tables =
      [] {
        std::array<PermutationTable, kFamilyMaxGroundVars + 1> out;
        for (int kk = 0; kk <= kFamilyMaxGroundVars; ++kk) {
          std::vector<int> perm(kk);
          std::iota(perm.begin(), perm.end(), 0);
          do {
            std::array<std::uint8_t, 64> map{};
            for (std::uint32_t mask = 0; mask < (1u << kk); ++mask) {
              std::uint32_t image = 0;
              for (int i = 0; i < kk; ++i) {
                if ((mask >> i) & 1u) image |= 1u << perm[i];
              }
              map[mask] = static_cast<std::uint8_t>(image);
            }
            out[kk].push_back(map);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return out;
      }();
  return tables[k];
}

// True iff no relabelling maps `sets` (sorted) to a lexicographically
// smaller sorted list.
bool is_canonical(int k, const std::vector<std::uint32_t>& sets) {
  std::array<std::uint32_t, kFamilyMaxItems> image{};
  const std::size_t m = sets.size();
  for (const auto& map : permutation_table(k)) {
    for (std::size_t i = 0; i < m; ++i) image[i] = map[sets[i]];
    std::sort(image.begin(), image.begin() + m);
    for (std::size_t i = 0; i < m; ++i) {
      if (image[i] < sets[i]) return false;
      if (image[i] > sets[i]) break;
    }
  }
  return true;
}

void check_family_guard(int k, int n) {
  if (k < 1 || k > kFamilyMaxGroundVars || n < 2 || n > kFamilyMaxItems) {
    throw Error(ErrorKind::kGuardExceeded,
                "family guards are 1 <= k <= " +
                    std::to_string(kFamilyMaxGroundVars) + " and 2 <= n <= " +
                    std::to_string(kFamilyMaxItems) + " (got k=" +
                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

// Precedence constraints among items collected while resolving ties:
// after[x] holds every item that must come later than x (transitively).
using Precedence = std::array<std::uint32_t, kMaxItems>;

TieBreak priority_from(const Instance& instance, const Precedence& after) {
  const int n = instance.num_items();
  std::vector<ItemIndex> order;
  std::uint32_t placed = 0;
  while (static_cast<int>(order.size()) < n) {
    for (ItemIndex e = 0; e < n; ++e) {
      if ((placed >> e) & 1u) continue;
      bool free = true;
      for (ItemIndex x = 0; x < n && free; ++x) {
        if (!((placed >> x) & 1u) && x != e && ((after[x] >> e) & 1u)) {
          free = false;
        }
      }
      if (free) {
        order.push_back(e);
        placed |= 1u << e;
        break;
      }
    }
  }
  return TieBreak::from_positions(instance, std::move(order));
}

class TieExplorer {
 public:
  explicit TieExplorer(const Instance& instance) : instance_(instance) {}

  void run() {
    Precedence none{};
    explore({PartialRealization()}, none, 0.0);
  }

  double best_cost() const { return best_cost_; }
  const Precedence& best_precedence() const { return best_; }
  std::size_t trees() const { return trees_; }

 private:
  const std::vector<ItemIndex>& ties(const PartialRealization& psi) {
    auto it = ties_.find(psi);
    if (it != ties_.end()) return it->second;
    try {
      return ties_.emplace(psi, greedy_ties(instance_, psi, psi.domain_mask()))
          .first->second;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNoItemsLeft) throw;
      throw Error(ErrorKind::kNotCoverable,
                  "greedy exhausted every item without reaching Q");
    }
  }

  void explore(std::vector<PartialRealization> pending, const Precedence& after,
               double cost) {
    if (pending.empty()) {
      ++trees_;
      if (trees_ == 1 || cost > best_cost_ + kCostTieTolerance) {
        best_cost_ = cost;
        best_ = after;
      }
      return;
    }
    const PartialRealization psi = pending.back();
    pending.pop_back();
    const std::vector<ItemIndex>& tied = ties(psi);
    std::uint32_t tied_mask = 0;
    for (ItemIndex e : tied) tied_mask |= 1u << e;
    const double reach = instance_.mass(psi);
    for (ItemIndex t : tied) {
      bool allowed = true;
      for (ItemIndex u : tied) {
        if (u != t && ((after[u] >> t) & 1u)) allowed = false;
      }
      if (!allowed) continue;
      Precedence next = after;
      const std::uint32_t later = tied_mask & ~(1u << t);
      if (later != 0) {
        std::uint32_t closure = later;
        for (ItemIndex u : tied) {
          if ((later >> u) & 1u) closure |= after[u];
        }
        for (ItemIndex x = 0; x < instance_.num_items(); ++x) {
          if (x == t || ((after[x] >> t) & 1u)) next[x] |= closure;
        }
      }
      std::vector<PartialRealization> queue = pending;
      for (Outcome o : {Outcome::kOne, Outcome::kZero}) {
        const PartialRealization child = psi.with(t, o);
        if (instance_.mass(child) > 0.0 &&
            !instance_.utility().is_covered(child)) {
          queue.push_back(child);
        }
      }
      explore(std::move(queue), next, cost + reach * instance_.cost(t));
    }
  }

  const Instance& instance_;
  std::unordered_map<PartialRealization, std::vector<ItemIndex>,
                     PartialRealizationHash>
      ties_;
  Precedence best_{};
  double best_cost_ = 0.0;
  std::size_t trees_ = 0;
};

struct Probe {
  RatioPoint point;
  TieBreak tiebreak;
};

Probe probe(const Instance& instance, double p) {
  const Instance at = instance.at_p(p);
  WorstTieBreak worst = worst_tiebreak(at, p);
  const double opt = optimal_cost(at).cost;
  return {{p, worst.greedy_cost, opt, worst.greedy_cost / opt},
          std::move(worst.tiebreak)};
}

std::vector<FamilySpec> search_members(int k_max, int n_max,
                                       std::size_t& pruned) {
  check_family_guard(k_max, n_max);
  std::vector<FamilySpec> members;
  pruned = 0;
  for (int n = 2; n <= n_max; ++n) {
    for (FamilySpec& spec : generate_family(k_max, n)) {
      if (spec.has_duplicate_triggers()) {
        ++pruned;
      } else {
        members.push_back(std::move(spec));
      }
    }
  }
  return members;
}

void sort_reports(std::vector<SearchReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const SearchReport& a, const SearchReport& b) {
                     if (a.rho != b.rho) return a.rho > b.rho;
                     return a.instance < b.instance;
                   });
}

}  // namespace

Instance FamilySpec::instantiate(double p) const {
  std::vector<GroundVar> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({i, 1.0 - p});
  std::vector<Item> items;
  char name = 'a';
  for (std::uint32_t mask : trigger_sets) {
    if (name == 'd') ++name;
    OrOf ors;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) ors.vars.push_back(i + 1);
    }
    items.push_back({std::string(1, name++), ItemCost::fixed(1.0), ors});
  }
  items.push_back({"d", ItemCost::dummy(), AlwaysOne{}});
  return Instance::bernoulli(std::move(vars), std::move(items), p);
}

std::string FamilySpec::describe() const {
  std::string out;
  for (std::size_t s = 0; s < trigger_sets.size(); ++s) {
    if (s > 0) out += ';';
    out += '{';
    bool first = true;
    for (int i = 0; i < k; ++i) {
      if (!((trigger_sets[s] >> i) & 1u)) continue;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
    out += '}';
  }
  return out;
}

bool FamilySpec::has_duplicate_triggers() const {
  return std::adjacent_find(trigger_sets.begin(), trigger_sets.end()) !=
         trigger_sets.end();
}

FamilySpec canonicalize(int k, std::vector<std::uint32_t> trigger_sets) {
  if (k < 1 || k > kFamilyMaxGroundVars ||
      trigger_sets.size() + 1 > static_cast<std::size_t>(kFamilyMaxItems)) {
    throw Error(ErrorKind::kGuardExceeded, "family member outside the guards");
  }
  for (std::uint32_t mask : trigger_sets) {
    if (mask == 0 || mask >= (1u << k)) {
      throw Error(ErrorKind::kInvalidInstance,
                  "trigger sets must be non-empty subsets of {1..k}");
    }
  }
  std::vector<std::uint32_t> best;
  for (const auto& map : permutation_table(k)) {
    std::vector<std::uint32_t> image;
    for (std::uint32_t mask : trigger_sets) image.push_back(map[mask]);
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  }
  return {k, static_cast<int>(trigger_sets.size()) + 1, std::move(best)};
}

std::vector<FamilySpec> generate_family(int k, int n) {
  check_family_guard(k, n);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::uint32_t limit = 1u << k;
  std::vector<FamilySpec> out;
  std::vector<std::uint32_t> prefix;
  // A prefix of a canonical multiset is canonical, so pruning non-canonical
  // prefixes loses nothing.
  auto extend = [&](auto&& self, std::uint32_t from) -> void {
    for (std::uint32_t mask = from; mask < limit; ++mask) {
      prefix.push_back(mask);
      if (is_canonical(k, prefix)) {
        if (prefix.size() == m) {
          out.push_back({k, n, prefix});
        } else {
          self(self, mask);
        }
      }
      prefix.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

RatioPoint ratio_at(const Instance& instance, double p,
                    const TieBreak& tiebreak) {
  const Instance at = instance.at_p(p);
  const double greedy = expected_cost(at, build_greedy_tree(at, tiebreak));
  const double opt = optimal_cost(at).cost;
  return {p, greedy, opt, greedy / opt};
}

WorstTieBreak worst_tiebreak(const Instance& instance, double p) {
  if (instance.num_items() > kWorstTieBreakMaxItems) {
    throw Error(ErrorKind::kGuardExceeded,
                "worst tie-break search limited to " +
                    std::to_string(kWorstTieBreakMaxItems) + " items");
  }
  const Instance at = instance.at_p(p);
  TieExplorer explorer(at);
  explorer.run();
  TieBreak tiebreak = priority_from(at, explorer.best_precedence());
  const double cost = expected_cost(at, build_greedy_tree(at, tiebreak));
  return {std::move(tiebreak), cost, explorer.trees()};
}

RatioMaximum maximize_over_p(const Instance& instance,
                             const MaximizeOptions& options) {
  const double lo = options.lo;
  const double hi = options.hi;
  const double step = options.step;
  if (!(0.0 < lo && lo <= hi && hi < 1.0 && step > 0.0)) {
    throw Error(ErrorKind::kInvalidInstance,
                "p range must satisfy 0 < lo <= hi < 1 with a positive step");
  }
  const int points = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  Probe best = probe(instance, lo);
  int best_index = 0;
  for (int i = 1; i < points; ++i) {
    Probe current = probe(instance, lo + i * step);
    if (current.point.rho > best.point.rho) {
      best = std::move(current);
      best_index = i;
    }
  }

  // Golden-section refinement on the bracket around the best grid point.
  double a = std::max(lo, lo + (best_index - 1) * step);
  double b = std::min(hi, lo + (best_index + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  Probe pc = probe(instance, c);
  Probe pd = probe(instance, d);
  while (b - a > options.tolerance) {
    if (pc.point.rho >= pd.point.rho) {
      b = d;
      d = c;
      pd = std::move(pc);
      c = b - inv_phi * (b - a);
      pc = probe(instance, c);
    } else {
      a = c;
      c = d;
      pc = std::move(pd);
      d = a + inv_phi * (b - a);
      pd = probe(instance, d);
    }
  }
  for (Probe* candidate : {&pc, &pd}) {
    if (candidate->point.rho > best.point.rho) best = std::move(*candidate);
  }
  return {best.point, std::move(best.tiebreak)};
}

SearchReport evaluate_member(const FamilySpec& spec,
                             const MaximizeOptions& options) {
  const Instance instance = spec.instantiate(0.5);
  RatioMaximum max = maximize_over_p(instance, options);
  return {spec,
          max.point.p,
          max.point.greedy_cost,
          max.point.opt_cost,
          max.point.rho,
          max.tiebreak.ids(instance)};
}

SearchResult search_worst(int k_max, int n_max, const SearchOptions& options) {
  SearchResult result;
  const std::vector<FamilySpec> members =
      search_members(k_max, n_max, result.pruned_duplicates);
  result.members = members.size();
  const int count = static_cast<int>(members.size());
  result.reports.resize(members.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(options.threads))
  for (int i = 0; i < count; ++i) {
    try {
      result.reports[i] = evaluate_member(members[i], options.maximize);
    } catch (...) {
#pragma omp critical(asc_search_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  sort_reports(result.reports);
  return result;
}

SearchResult search_worst_serial(int k_max, int n_max,
                                 const SearchOptions& options) {
  SearchResult result;
  const std::vector<FamilySpec> members =
      search_members(k_max, n_max, result.pruned_duplicates);
  result.members = members.size();
  for (const FamilySpec& spec : members) {
    result.reports.push_back(evaluate_member(spec, options.maximize));
  }
  sort_reports(result.reports);
  return result;
}

std::vector<RatioPoint> sweep(const Instance& instance,
                              const std::vector<double>& grid,
                              const std::optional<TieBreak>& tiebreak,
                              int threads) {
  std::vector<RatioPoint> out(grid.size());
  const int count = static_cast<int>(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
  for (int i = 0; i < count; ++i) {
    try {
      out[i] = tiebreak ? ratio_at(instance, grid[i], *tiebreak)
                        : probe(instance, grid[i]).point;
    } catch (...) {
#pragma omp critical(asc_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace asc
