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

#ifndef ASC_UTILITY_HPP_
#define ASC_UTILITY_HPP_

#include <memory>
#include <unordered_map>

#include "asc/realization.hpp"

namespace asc {

enum class UtilityKind { kHitOne, kTable };

using UtilityTable =
    std::unordered_map<PartialRealization, int, PartialRealizationHash>;

// Integer-valued utility over partial realizations, with maximal value Q.
//
// HitOne is the coverage function min{|psi ∩ E*|, 1} where E* holds every
// (e, 1) pair: it is 1 as soon as any observed outcome is 1. Table is an
// explicit lookup used to build arbitrary (possibly non-monotone or
// non-submodular) small test functions.
class Utility {
 public:
  static Utility hit_one();
  // Requires table[∅] == 0 when present and every value in [0, q_max].
  static Utility table(UtilityTable values, int q_max);

  UtilityKind kind() const { return kind_; }
  int q_max() const { return q_max_; }
  const UtilityTable* entries() const { return table_.get(); }

  // Throws Error(kUndefinedEntry) for a Table gap.
  int evaluate(const PartialRealization& psi) const;
  bool is_covered(const PartialRealization& psi) const {
    return evaluate(psi) == q_max_;
  }

 private:
  Utility() = default;

  UtilityKind kind_ = UtilityKind::kHitOne;
  int q_max_ = 1;
  std::shared_ptr<const UtilityTable> table_;
};

inline int evaluate(const Utility& f, const PartialRealization& psi) {
  return f.evaluate(psi);
}

inline bool is_covered(const Utility& f, const PartialRealization& psi) {
  return f.is_covered(psi);
}

}  // namespace asc

#endif  // ASC_UTILITY_HPP_
