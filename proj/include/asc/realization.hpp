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

#ifndef ASC_REALIZATION_HPP_
#define ASC_REALIZATION_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace asc {

// Position of an item inside its Instance.
using ItemIndex = int;

inline constexpr int kMaxItems = 32;

enum class Outcome : std::uint8_t { kZero = 0, kOne = 1 };

inline constexpr Outcome kOutcomes[] = {Outcome::kZero, Outcome::kOne};

inline int to_int(Outcome o) { return static_cast<int>(o); }

// A set of (item, outcome) observations with at most one pair per item.
//
// Stored as two masks over item positions: `domain` holds the observed
// items and `ones` the subset of those whose outcome is 1. The encoding is
// canonical, so defaulted comparison and hashing are structural.
class PartialRealization {
 public:
  PartialRealization() = default;

  // Bits of `ones` outside `domain` are dropped.
  static PartialRealization from_masks(std::uint32_t domain,
                                       std::uint32_t ones) {
    PartialRealization r;
    r.domain_ = domain;
    r.ones_ = ones & domain;
    return r;
  }

  std::uint32_t domain_mask() const { return domain_; }
  std::uint32_t ones_mask() const { return ones_; }

  int size() const { return std::popcount(domain_); }
  bool empty() const { return domain_ == 0; }

  bool observed(ItemIndex e) const { return (domain_ >> e) & 1u; }
  // Only meaningful when observed(e).
  Outcome outcome(ItemIndex e) const {
    return ((ones_ >> e) & 1u) ? Outcome::kOne : Outcome::kZero;
  }

  // Adds (e, o). Throws Error(kItemAlreadyObserved) if e is in the domain.
  PartialRealization with(ItemIndex e, Outcome o) const;

  // The restriction of this realization to the items in `mask`.
  PartialRealization restricted_to(std::uint32_t mask) const {
    return from_masks(domain_ & mask, ones_);
  }

  // True iff a full outcome vector (bit e = outcome of item e) extends this.
  bool consistent_with(std::uint32_t full_ones) const {
    return (full_ones & domain_) == ones_;
  }

  // Size first, then masks: the order used to report minimal witnesses.
  friend std::strong_ordering operator<=>(const PartialRealization& a,
                                          const PartialRealization& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    return a.ones_ <=> b.ones_;
  }
  friend bool operator==(const PartialRealization&,
                         const PartialRealization&) = default;

 private:
  std::uint32_t domain_ = 0;
  std::uint32_t ones_ = 0;
};

// psi ⪯ psi_prime: every observation of psi also appears in psi_prime.
inline bool is_subrealization(const PartialRealization& psi,
                              const PartialRealization& psi_prime) {
  return (psi.domain_mask() & ~psi_prime.domain_mask()) == 0 &&
         (psi_prime.ones_mask() & psi.domain_mask()) == psi.ones_mask();
}

struct PartialRealizationHash {
  std::size_t operator()(const PartialRealization& r) const {
    std::uint64_t key = (std::uint64_t{r.domain_mask()} << 32) | r.ones_mask();
    return std::hash<std::uint64_t>{}(key * 0x9E3779B97F4A7C15ull);
  }
};

}  // namespace asc

#endif  // ASC_REALIZATION_HPP_
