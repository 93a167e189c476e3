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

#include "asc/utility.hpp"

#include <string>
#include <utility>

#include "asc/errors.hpp"

namespace asc {

PartialRealization PartialRealization::with(ItemIndex e, Outcome o) const {
  if (observed(e)) {
    throw Error(ErrorKind::kItemAlreadyObserved,
                "item #" + std::to_string(e) + " already observed");
  }
  const std::uint32_t bit = 1u << e;
  return from_masks(domain_ | bit, o == Outcome::kOne ? (ones_ | bit) : ones_);
}

Utility Utility::hit_one() { return Utility(); }

Utility Utility::table(UtilityTable values, int q_max) {
  if (q_max <= 0) {
    throw Error(ErrorKind::kInvalidInstance, "table utility needs Q > 0");
  }
  for (const auto& [psi, value] : values) {
    if (value < 0 || value > q_max) {
      throw Error(ErrorKind::kInvalidInstance,
                  "table utility value " + std::to_string(value) +
                      " outside [0, Q]");
    }
    if (psi.empty() && value != 0) {
      throw Error(ErrorKind::kInvalidInstance, "table utility needs f(∅) = 0");
    }
  }
  Utility u;
  u.kind_ = UtilityKind::kTable;
  u.q_max_ = q_max;
  u.table_ = std::make_shared<const UtilityTable>(std::move(values));
  return u;
}

int Utility::evaluate(const PartialRealization& psi) const {
  if (kind_ == UtilityKind::kHitOne) return psi.ones_mask() != 0 ? 1 : 0;
  if (psi.empty()) return 0;
  auto it = table_->find(psi);
  if (it == table_->end()) {
    throw Error(ErrorKind::kUndefinedEntry,
                "table utility has no entry for domain mask " +
                    std::to_string(psi.domain_mask()) + ", ones mask " +
                    std::to_string(psi.ones_mask()));
  }
  return it->second;
}

}  // namespace asc
