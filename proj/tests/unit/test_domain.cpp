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

#include "groves/domain.hpp"
#include "groves/errors.hpp"
#include "groves/numerics.hpp"
#include "groves/setting.hpp"
#include "support.hpp"

namespace groves {
namespace {

using testing::all_vectors;
using testing::brute_vcg_payment;

std::vector<Rational> R(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(TypeGridTest, Validation) {
  EXPECT_THROW(TypeGrid(1, R({0, 1})), ContractViolation);
  EXPECT_THROW(TypeGrid(3, R({})), ContractViolation);
  EXPECT_THROW(TypeGrid(3, R({0, 2, 2})), ContractViolation);
  EXPECT_THROW(TypeGrid(3, R({0, 1}), Rational(-1), Rational(1)), ContractViolation);
  const TypeGrid g(3, R({0, 1, 3}), Rational(0), Rational(3));
  EXPECT_EQ(g.lower(), Rational(0));
  EXPECT_EQ(g.upper(), Rational(3));
  EXPECT_EQ(g.index_of(Rational(3)), 2u);
  EXPECT_FALSE(g.contains(Rational(2)));
}

TEST(DomainTest, PairingValidation) {
  EXPECT_THROW(Setting(Domain::multi_unit(3), integer_grid(3, 0, 2)), ContractViolation);
  EXPECT_THROW(Setting(Domain::single_item(), integer_grid(3, -1, 2)), ContractViolation);
  EXPECT_THROW(Setting(Domain::public_project_equal(Rational(2)), integer_grid(3, 0, 3)), ContractViolation);
  EXPECT_THROW(Setting(Domain::public_project_general(R({1, 1})), integer_grid(3, 0, 2)), ContractViolation);
  EXPECT_THROW(Domain::public_project_equal(Rational(0)), ContractViolation);
  EXPECT_THROW(Domain::public_project_general(R({1, 0, 1})), ContractViolation);
  EXPECT_EQ(Domain::public_project_general(R({10, 40, 50})).cost(), Rational(100));
}

TEST(OutcomeTest, DocumentedCases) {
  const TypeGrid g30(3, R({0, 10, 25}));
  EXPECT_EQ(std::get<ProjectChoice>(outcome(Domain::public_project_equal(Rational(30)), g30, R({25, 10, 0}))).build,
            true);
  EXPECT_EQ(std::get<ProjectChoice>(outcome(Domain::public_project_equal(Rational(30)), g30, R({10, 10, 10}))).build,
            true);
  EXPECT_EQ(std::get<ProjectChoice>(outcome(Domain::public_project_equal(Rational(30)), g30, R({10, 10, 0}))).build,
            false);
  const auto alloc = std::get<Allocation>(outcome(Domain::multi_unit(2), integer_grid(4, 0, 3), R({3, 2, 2, 1})));
  EXPECT_EQ(alloc.winners, (std::vector<std::size_t>{0, 1}));
  const auto tie = std::get<Allocation>(outcome(Domain::single_item(), integer_grid(3, 0, 3), R({1, 3, 3})));
  EXPECT_EQ(tie.winners, (std::vector<std::size_t>{1}));
  EXPECT_THROW(outcome(Domain::single_item(), integer_grid(3, 0, 3), R({1, 3})), ContractViolation);
  EXPECT_THROW(outcome(Domain::single_item(), integer_grid(3, 0, 3), R({1, 3, 4})), ContractViolation);
}

TEST(ValuationTest, DocumentedCases) {
  EXPECT_EQ(valuation(Domain::public_project_equal(Rational(30)), 3, ProjectChoice{true}, 0, Rational(25)),
            Rational(15));
  EXPECT_EQ(valuation(Domain::public_project_equal(Rational(30)), 3, ProjectChoice{false}, 0, Rational(25)),
            Rational(0));
  EXPECT_EQ(valuation(Domain::public_project_general(R({10, 40, 50})), 3, ProjectChoice{true}, 1, Rational(10)),
            Rational(-30));
  EXPECT_EQ(valuation(Domain::multi_unit(2), 4, Allocation{{0, 1}}, 3, Rational(1)), Rational(0));
  EXPECT_EQ(valuation(Domain::multi_unit(2), 4, Allocation{{0, 1}}, 1, Rational(2)), Rational(2));
}

TEST(VcgPaymentTest, DocumentedCases) {
  EXPECT_EQ(vcg_payment(Domain::multi_unit(2), integer_grid(4, 0, 3), R({3, 2, 2, 1}), 0), Rational(2));
  EXPECT_EQ(total_vcg(Domain::multi_unit(2), integer_grid(4, 0, 3), R({3, 2, 2, 1})), Rational(4));
  const TypeGrid g30(3, R({0, 10, 25}));
  const auto pe = Domain::public_project_equal(Rational(30));
  EXPECT_EQ(vcg_payment(pe, g30, R({25, 10, 0}), 0), Rational(10));
  EXPECT_EQ(total_vcg(pe, g30, R({10, 10, 10})), Rational(0));
  EXPECT_EQ(total_vcg(Domain::single_item(), integer_grid(3, 0, 5), R({5, 3, 1})), Rational(3));
}

struct DomainCase {
  Domain domain;
  TypeGrid grid;
};

std::vector<DomainCase> small_cases() {
  std::vector<DomainCase> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    out.push_back({Domain::single_item(), integer_grid(n, 0, 3)});
    for (std::size_t m = 2; m < n; ++m) out.push_back({Domain::multi_unit(m), integer_grid(n, 0, 3)});
    out.push_back({Domain::public_project_equal(Rational(3)), integer_grid(n, 0, 3)});
  }
  out.push_back({Domain::public_project_general(R({1, 2, 3})), integer_grid(3, 0, 6)});
  out.push_back({Domain::public_project_general({Rational(1, 2), Rational(5, 2)}), TypeGrid(2, {0, Rational(1, 2), 2, 3})});
  return out;
}

TEST(VcgPaymentTest, MatchesBruteForceEverywhere) {
  for (const auto& c : small_cases()) {
    for (const auto& profile : all_vectors(c.grid, c.grid.agents())) {
      Rational total;
      for (std::size_t a = 0; a < profile.size(); ++a) {
        const Rational t = vcg_payment(c.domain, c.grid, profile, a);
        EXPECT_EQ(t, brute_vcg_payment(c.domain, profile, a)) << c.domain.describe() << " at " << join(profile);
        EXPECT_GE(t.sign(), 0);
        total += t;
      }
      EXPECT_EQ(total, total_vcg(c.domain, c.grid, profile));
    }
  }
}

TEST(VcgPaymentTest, MultiUnitClosedFormUpToSixAgents) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const TypeGrid grid = integer_grid(n, 0, 2);
    for (std::size_t m = 1; m < n; ++m) {
      const Domain d = m == 1 ? Domain::single_item() : Domain::multi_unit(m);
      for (const auto& p : all_vectors(grid, n)) {
        EXPECT_EQ(total_vcg(d, grid, p), Rational(static_cast<long>(m)) * order_statistic(p, m + 1));
      }
    }
  }
}

TEST(OutcomeTest, MaximizesWelfareEverywhere) {
  for (const auto& c : small_cases()) {
    const std::size_t n = c.grid.agents();
    for (const auto& profile : all_vectors(c.grid, n)) {
      const Decision d = outcome(c.domain, c.grid, profile);
      Rational chosen;
      for (std::size_t a = 0; a < n; ++a) chosen += valuation(c.domain, n, d, a, profile[a]);
      if (c.domain.is_auction()) {
        const std::size_t m = c.domain.units();
        EXPECT_EQ(std::get<Allocation>(d).winners.size(), m);
        std::vector<Rational> sorted = profile;
        std::sort(sorted.begin(), sorted.end(), [](const Rational& x, const Rational& y) { return y < x; });
        Rational best;
        for (std::size_t j = 0; j < m; ++j) best += sorted[j];
        EXPECT_EQ(chosen, best);
      } else {
        Rational build;
        for (std::size_t a = 0; a < n; ++a) build += valuation(c.domain, n, ProjectChoice{true}, a, profile[a]);
        EXPECT_EQ(chosen, std::max(build, Rational(0)));
      }
    }
  }
}

TEST(SettingTest, PermutationIndependenceOfTotalVcg) {
  EXPECT_TRUE(Setting(Domain::single_item(), integer_grid(3, 0, 3)).vcg_permutation_independent());
  EXPECT_TRUE(Setting(Domain::multi_unit(2), integer_grid(4, 0, 2)).vcg_permutation_independent());
  EXPECT_TRUE(Setting(Domain::public_project_equal(Rational(3)), integer_grid(3, 0, 3)).vcg_permutation_independent());
  EXPECT_FALSE(
      Setting(Domain::public_project_general(R({10, 40, 50})), TypeGrid(3, R({0, 10, 40, 50, 70, 100})))
          .vcg_permutation_independent());
}

TEST(KeySpaceTest, CodesRoundTripAndOrderLexicographically) {
  const KeySpace keys(4, 3);
  EXPECT_EQ(keys.profile_count(), 81u);
  EXPECT_EQ(keys.others_count(), 27u);
  EXPECT_EQ(keys.multiset_count(), 10u);
  for (std::size_t p = 0; p < keys.profile_count(); ++p) {
    EXPECT_EQ(keys.encode_profile(keys.profile_indices(p)), p);
    for (std::size_t a = 0; a < 4; ++a) {
      const std::size_t o = keys.remove(p, a);
      auto idx = keys.profile_indices(p);
      const std::size_t own = idx[a];
      idx.erase(idx.begin() + static_cast<long>(a));
      EXPECT_EQ(keys.others_indices(o), idx);
      EXPECT_EQ(keys.insert(o, a, own), p);
    }
  }
  for (std::size_t p = 1; p < keys.profile_count(); ++p) {
    EXPECT_TRUE(keys.profile_indices(p - 1) < keys.profile_indices(p));
  }
  std::size_t prev = 0;
  for (std::size_t r = 0; r < keys.multiset_count(); ++r) {
    const auto idx = keys.others_indices(keys.multiset_code(r));
    EXPECT_TRUE(std::is_sorted(idx.rbegin(), idx.rend()));
    if (r > 0) EXPECT_GT(keys.multiset_code(r), prev);
    prev = keys.multiset_code(r);
  }
  for (std::size_t o = 0; o < keys.others_count(); ++o) {
    auto idx = keys.others_indices(o);
    std::sort(idx.begin(), idx.end(), std::greater<>());
    EXPECT_EQ(keys.multiset_code(keys.multiset_rank(o)), keys.encode_others(idx));
  }
  EXPECT_THROW(KeySpace(30, 2), ContractViolation);
}

}  // namespace
}  // namespace groves
