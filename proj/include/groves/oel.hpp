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


// Optimal-in-expectation linear redistributions for unit-demand auctions of
// m identical units among n agents with types in [L, U]:
//
//   r(theta_{-i}) = c_0 + sum_{j=1}^{n-1} c_j [theta_{-i}]_j.
//
// The family is indexed by k in [0, n] with k - m odd. Index m + 1 is the
// Bailey-Cavallo redistribution (m/n) [theta_{-i}]_{m+1}.

#ifndef GROVES_OEL_HPP_
#define GROVES_OEL_HPP_

#include <cstddef>
#include <optional>

#include "groves/domain.hpp"
#include "groves/mechanism.hpp"
#include "groves/rational.hpp"

namespace groves {

struct OELSpec {
  std::size_t agents = 0;
  std::size_t units = 0;
  std::size_t index = 0;
  Rational lower;
  Rational upper;

  // Throws ContractViolation unless 1 <= units < agents, index <= agents,
  // index - units is odd and lower < upper.
  void validate() const;
};

// Coefficients c_0 (constant) and c_1..c_{n-1}, in exact arithmetic.
LinearRedistribution oel_coefficients(const OELSpec& spec);

// Auction domain for `spec`: a single item for m = 1, m units otherwise.
Domain oel_domain(const OELSpec& spec);

// OEL mechanism over `grid`, whose endpoints must be L and U.
GrovesMechanism oel_mechanism(const OELSpec& spec, const TypeGrid& grid);

// Exact budget balance on every grid profile of the scenario of `spec`:
// [theta]_1 = U for k = 0, [theta]_{k+1} = [theta]_k for 0 < k < n and
// [theta]_n = L for k = n.
struct BudgetScenarioReport {
  bool holds = true;
  std::size_t profiles_checked = 0;
  std::optional<Witness> witness;
};

BudgetScenarioReport oel_budget_scenarios(const OELSpec& spec, const TypeGrid& grid);

}  // namespace groves

#endif  // GROVES_OEL_HPP_
