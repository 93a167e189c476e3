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

#ifndef ASC_ERRORS_HPP_
#define ASC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace asc {

enum class ErrorKind {
  kGroundSetTooLarge,
  kConditioningOnNull,
  kItemAlreadyObserved,
  kUndefinedEntry,
  kNoItemsLeft,
  kNotCoverable,
  kTooManyItems,
  kGuardExceeded,
  kInvalidInstance,
  kInvalidPolicy,
  kSchema,
};

const char* error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace asc

#endif  // ASC_ERRORS_HPP_
