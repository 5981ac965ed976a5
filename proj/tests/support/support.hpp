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


// Seeded generators and brute-force oracles shared by the test binaries.
// The oracles here deliberately avoid the library's closed forms.

#ifndef GROVES_TESTS_SUPPORT_HPP_
#define GROVES_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "groves/domain.hpp"
#include "groves/mechanism.hpp"
#include "groves/oel.hpp"
#include "groves/rational.hpp"
#include "groves/setting.hpp"

namespace groves::testing {

using Rng = std::mt19937_64;

// Small rational p/q with |p| <= 6 and q in {1, 2, 3, 4, 6}.
Rational random_small_rational(Rng& rng);

// Random tables shifted by a common constant so the result is non-deficit
// and has at least one budget-balanced profile.
TabulatedRedistribution random_non_deficit_tabulated(const Setting& setting, Rng& rng);
AnonymousRedistribution random_non_deficit_anonymous(const Setting& setting, Rng& rng);

// Efficient decision and VCG payment by enumerating every decision.
Rational brute_vcg_payment(const Domain& domain, std::span<const Rational> profile, std::size_t agent);
Rational brute_total_vcg(const Domain& domain, std::span<const Rational> profile);

// min over the grid of the total payment with `agent`'s type varied, from
// first principles (value-based, no key codes).
Rational brute_surplus(const GrovesMechanism& mech, std::size_t agent, std::span<const Rational> others);

// Every others-vector over the grid, in lexicographic order.
std::vector<std::vector<Rational>> all_vectors(const TypeGrid& grid, std::size_t length);

// OEL coefficients recovered by solving the budget-balance conditions of
// index k as a linear system, independent of the closed-form coefficients.
LinearRedistribution oel_by_elimination(const OELSpec& spec);

// All (n, m, k) with 2 <= n <= max_n, 1 <= m < n, 0 <= k <= n, k - m odd.
struct OelIndex {
  std::size_t n;
  std::size_t m;
  std::size_t k;
};
std::vector<OelIndex> oel_indices(std::size_t max_n);

}  // namespace groves::testing

#endif  // GROVES_TESTS_SUPPORT_HPP_
