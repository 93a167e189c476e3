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

// Instance files, the built-in gap instance, and text/JSON formatting.
//
// File format:
//   { "p": 0.7221, "ground_vars": 4, "utility": "hit_one",
//     "items": [ {"id": "a", "cost": 1.0, "or_of": [1, 2]},
//                {"id": "d", "cost": "dummy", "always_one": true} ] }
// Ground variables are 1-indexed; "dummy" means cost 1/(1-p). "utility" is
// optional. Unknown fields are rejected.

#ifndef ASC_INSTANCE_IO_HPP_
#define ASC_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asc/checker.hpp"
#include "asc/core_model.hpp"
#include "asc/search.hpp"

namespace asc {

// Throws Error(kSchema) with "<source>: <field path>: <problem>".
Instance parse_instance(const nlohmann::json& doc, const std::string& source,
                        std::optional<double> p_override = std::nullopt);
Instance load_instance(const std::string& path,
                       std::optional<double> p_override = std::nullopt);
nlohmann::json instance_to_json(const Instance& instance);

// Items a = X1∨X2, b = X3∨X4, c = X1∨X3 at unit cost, d always 1 at 1/(1-p).
Instance paper_instance(double p);
// Throws Error(kSchema) for names other than "paper".
Instance builtin_instance(const std::string& name, double p);

// 12 significant digits.
std::string format_number(double value);
// "{(a,0),(c,0)}", pairs in instance order; "{}" when empty.
std::string format_partial(const Instance& instance,
                           const PartialRealization& psi);

nlohmann::json partial_to_json(const Instance& instance,
                               const PartialRealization& psi);
nlohmann::json check_report_to_json(const Instance& instance,
                                    const CheckReport& report);
nlohmann::json search_report_to_json(const SearchReport& report);

}  // namespace asc

#endif  // ASC_INSTANCE_IO_HPP_
