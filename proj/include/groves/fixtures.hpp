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


// Reference instances with known exact values, used as regression anchors
// and exportable as mechanism spec files.

#ifndef GROVES_FIXTURES_HPP_
#define GROVES_FIXTURES_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "groves/domain.hpp"
#include "groves/mechanism.hpp"
#include "groves/rational.hpp"

namespace groves {

struct SeparationPair {
  GrovesMechanism first;
  GrovesMechanism second;
};

// One row of the tabulated pair: the key is the others' types in
// non-increasing order, with the value of each mechanism.
struct TabulatedRow {
  std::array<long, 3> key;
  Rational first;
  Rational second;
};

// All 20 multisets of three types from {0, 1, 2, 3}.
const std::vector<TabulatedRow>& tabulated_separation_rows();

// Single item, four agents, grid {0, 1, 2, 3}. The second mechanism
// collectively dominates the first, but neither individually dominates the
// other, and the first is individually undominated.
SeparationPair tabulated_separation_pair();

// Five-agent single-item rule keyed on the tie pattern a >= b >= c >= d of
// the four other types:
//   a = b = c = d      -> 0
//   a = b = c > d      -> a / 4
//   a = b > c          -> a / 6
//   a > b = c          -> 3b / 16
//   a > b > c          -> b / 5
Rational tie_pattern_redistribution(std::span<const Rational> others);

// The tie-pattern mechanism paired with Bailey-Cavallo (b / 5) on a
// five-agent single-item grid.
SeparationPair tie_pattern_separation_pair(const TypeGrid& grid);
SeparationPair tie_pattern_separation_pair();  // grid {0, ..., 5}

// Project of cost 100 split 10 / 40 / 50 on the grid {0, 10, ..., 100}. For
// agent 0 facing (10, 70) the VCG surplus guarantee is 10.
struct UnequalSharesInstance {
  Domain domain;
  TypeGrid grid;
  std::size_t agent;
  std::vector<Rational> others;
  Rational expected_surplus;
};

UnequalSharesInstance unequal_shares_instance();

struct ExpectedFact {
  std::string statement;
  std::string basis;
};

struct Fixture {
  std::string name;
  std::vector<std::string> mechanism_names;
  std::vector<GrovesMechanism> mechanisms;
  std::vector<ExpectedFact> facts;
};

// "tabulated_separation", "tie_pattern_separation", "unequal_shares".
std::vector<std::string> fixture_names();
// Throws ContractViolation for an unknown name.
Fixture fixture(const std::string& name);

}  // namespace groves

#endif  // GROVES_FIXTURES_HPP_
