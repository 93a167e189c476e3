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

#include "asc/errors.hpp"

namespace asc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::kConditioningOnNull: return "ConditioningOnNull";
    case ErrorKind::kItemAlreadyObserved: return "ItemAlreadyObserved";
    case ErrorKind::kUndefinedEntry: return "UndefinedEntry";
    case ErrorKind::kNoItemsLeft: return "NoItemsLeft";
    case ErrorKind::kNotCoverable: return "NotCoverable";
    case ErrorKind::kTooManyItems: return "TooManyItems";
    case ErrorKind::kGuardExceeded: return "GuardExceeded";
    case ErrorKind::kInvalidInstance: return "InvalidInstance";
    case ErrorKind::kInvalidPolicy: return "InvalidPolicy";
    case ErrorKind::kSchema: return "Schema";
  }
  return "Unknown";
}

}  // namespace asc
