// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON mechanism spec files.
//
//   {
//     "domain": {"type": "multi_unit", "units": 2},
//     "grid": {"n": 4, "values": ["0", "1", "2", "3"], "L": "0", "U": "3"},
//     "redistribution": {"type": "linear_anonymous", "constant": "0",
//                        "coefficients": ["0", "0", "1/2"]}
//   }
//
// Domain types: single_item, multi_unit {units}, public_project_equal {cost},
// public_project_general {shares}. Redistribution types:
// linear_anonymous {constant, coefficients}, anonymous_tabulated {entries}
// and tabulated {tables}, where entries are {"key": [...], "value": "p/q"}
// and tabulated holds one entry list per agent. Rationals are strings.
//
// The canonical form has sorted object keys, two-space indentation, one
// trailing newline, anonymous keys in non-increasing order and entries in
// ascending key order. dump(load(text)) == text for canonical text.

#ifndef GROVES_SPEC_IO_HPP_
#define GROVES_SPEC_IO_HPP_

#include <string>
#include <string_view>

#include "groves/mechanism.hpp"

namespace groves {

// Throws ParseError with "byte N" for malformed JSON and a JSON pointer for
// semantic problems (missing keys, wrong types, off-grid values, duplicate
// or missing table entries).
GrovesMechanism load_mechanism(std::string_view text, const std::string& source = "<input>");
GrovesMechanism load_mechanism_file(const std::string& path);

std::string dump_mechanism(const GrovesMechanism& mech);
void save_mechanism_file(const GrovesMechanism& mech, const std::string& path);

}  // namespace groves

#endif  // GROVES_SPEC_IO_HPP_
