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


#include <gtest/gtest.h>

#include <vector>

#include "groves/dominance.hpp"
#include "groves/errors.hpp"
#include "groves/oel.hpp"
#include "groves/transforms.hpp"
#include "support.hpp"

namespace groves {
namespace {

OELSpec make_spec(std::size_t n, std::size_t m, std::size_t k, long lower = 0, long upper = 3) {
  return OELSpec{n, m, k, Rational(lower), Rational(upper)};
}

TypeGrid grid_for(std::size_t n) { return integer_grid(n, 0, n <= 5 ? 3 : 2); }

TEST(OelCoefficientsTest, IndexMPlusOneIsBaileyCavallo) {
  const auto r = oel_coefficients(make_spec(4, 2, 3));
  EXPECT_TRUE(r.constant.is_zero());
  ASSERT_EQ(r.coefficients.size(), 3u);
  EXPECT_EQ(r.coefficients[0], Rational(0));
  EXPECT_EQ(r.coefficients[1], Rational(0));
  EXPECT_EQ(r.coefficients[2], Rational(1, 2));
}

TEST(OelCoefficientsTest, LowIndexMatchesDirectEvaluation) {
  const auto r = oel_coefficients(make_spec(4, 2, 1));
  EXPECT_EQ(r.coefficients[1], Rational(1));
  EXPECT_EQ(r, testing::oel_by_elimination(make_spec(4, 2, 1)));
}

TEST(OelCoefficientsTest, AgreesWithEliminationForEveryIndex) {
  for (const auto& idx : testing::oel_indices(6)) {
    for (const auto& [lo, hi] : std::vector<std::pair<long, long>>{{0, 3}, {1, 7}, {2, 5}}) {
      const auto spec = make_spec(idx.n, idx.m, idx.k, lo, hi);
      SCOPED_TRACE(::testing::Message() << "n=" << idx.n << " m=" << idx.m << " k=" << idx.k);
      EXPECT_EQ(oel_coefficients(spec), testing::oel_by_elimination(spec));
    }
  }
}

TEST(OelCoefficientsTest, LargeAgentCountsStayExact) {
  const auto spec = make_spec(40, 17, 0, 0, 1);
  EXPECT_EQ(oel_coefficients(spec), testing::oel_by_elimination(spec));
}

TEST(OelCoefficientsTest, InvalidIndicesRejected) {
  EXPECT_THROW(oel_coefficients(make_spec(4, 2, 2)), ContractViolation);
  EXPECT_THROW(oel_coefficients(make_spec(4, 2, 5)), ContractViolation);
  EXPECT_THROW(oel_coefficients(make_spec(4, 4, 1)), ContractViolation);
  EXPECT_THROW(oel_coefficients(make_spec(4, 0, 1)), ContractViolation);
  EXPECT_THROW(oel_coefficients(make_spec(4, 2, 1, 3, 3)), ContractViolation);
}

TEST(OelMechanismTest, GridMustSpanTheInterval) {
  EXPECT_THROW(oel_mechanism(make_spec(3, 1, 0), integer_grid(3, 0, 2)), ContractViolation);
  EXPECT_THROW(oel_mechanism(make_spec(3, 1, 0), integer_grid(4, 0, 3)), ContractViolation);
  EXPECT_NO_THROW(oel_mechanism(make_spec(3, 1, 0), integer_grid(3, 0, 3)));
  EXPECT_EQ(oel_domain(make_spec(3, 1, 0)), Domain::single_item());
  EXPECT_EQ(oel_domain(make_spec(4, 2, 1)), Domain::multi_unit(2));
}

TEST(OelBudgetTest, DocumentedProfile) {
  const auto spec = make_spec(4, 2, 3);
  const auto mech = oel_mechanism(spec, grid_for(4));
  const std::vector<Rational> theta{3, 2, 1, 1};
  EXPECT_EQ(total_vcg(mech.domain(), mech.grid(), theta), Rational(2));
  EXPECT_TRUE(total_payment(mech, theta).is_zero());
}

TEST(OelBudgetTest, ExtremeIndexScenarios) {
  const auto low = oel_mechanism(make_spec(3, 1, 0), integer_grid(3, 0, 3));
  EXPECT_TRUE(total_payment(low, std::vector<Rational>{1, 3, 0}).is_zero());
  const auto high = oel_mechanism(make_spec(4, 1, 4), integer_grid(4, 0, 3));
  EXPECT_TRUE(total_payment(high, std::vector<Rational>{2, 0, 3, 1}).is_zero());
}

TEST(OelPropertyTest, FamilyInvariantsUpToSixAgents) {
  for (const auto& idx : testing::oel_indices(6)) {
    const auto grid = grid_for(idx.n);
    const auto spec = OELSpec{idx.n, idx.m, idx.k, grid.lower(), grid.upper()};
    SCOPED_TRACE(::testing::Message() << "n=" << idx.n << " m=" << idx.m << " k=" << idx.k);
    const auto mech = oel_mechanism(spec, grid);
    EXPECT_TRUE(is_non_deficit(mech));
    EXPECT_TRUE(is_individually_undominated(mech));
    const auto scenarios = oel_budget_scenarios(spec, grid);
    EXPECT_TRUE(scenarios.holds);
    EXPECT_GT(scenarios.profiles_checked, 0u);
    if (idx.k == idx.m + 1) {
      const auto bc = bcgc(GrovesMechanism::vcg(mech.shared_setting()));
      EXPECT_EQ(mech.tabulated().tables, bc.tabulated().tables);
    }
  }
}

TEST(OelPropertyTest, EveryIndexHasZeroSlackEverywhere) {
  const auto spec = make_spec(5, 2, 1);
  const auto mech = oel_mechanism(spec, grid_for(5));
  for (const auto& row : slack_table(mech)) {
    for (const auto& s : row) EXPECT_TRUE(s.is_zero());
  }
}

TEST(OelBudgetTest, ShiftedConstantCreatesADeficit) {
  auto spec = make_spec(3, 1, 2);
  auto r = oel_coefficients(spec);
  r.constant += Rational(1, 7);
  const GrovesMechanism shifted(oel_domain(spec), integer_grid(3, 0, 3), r);
  EXPECT_FALSE(is_non_deficit(shifted));
}

}  // namespace
}  // namespace groves
