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


#include "groves/fixtures.hpp"

#include <algorithm>
#include <functional>

#include "groves/errors.hpp"
#include "groves/transforms.hpp"

namespace groves {

const std::vector<TabulatedRow>& tabulated_separation_rows() {
  static const std::vector<TabulatedRow> rows = {
      {{0, 0, 0}, Rational(0), Rational(0)},
      {{1, 0, 0}, Rational(0), Rational(0)},
      {{1, 1, 0}, Rational(1, 4), Rational(1, 4)},
      {{1, 1, 1}, Rational(1, 4), Rational(1, 4)},
      {{2, 0, 0}, Rational(0), Rational(0)},
      {{2, 1, 0}, Rational(1, 12), Rational(7, 24)},
      {{2, 1, 1}, Rational(0), Rational(1, 6)},
      {{2, 2, 0}, Rational(1, 2), Rational(1, 2)},
      {{2, 2, 1}, Rational(0), Rational(1, 4)},
      {{2, 2, 2}, Rational(1, 2), Rational(1, 2)},
      {{3, 0, 0}, Rational(0), Rational(0)},
      {{3, 1, 0}, Rational(1, 4), Rational(1, 4)},
      {{3, 1, 1}, Rational(0), Rational(1, 4)},
      {{3, 2, 0}, Rational(2, 3), Rational(2, 3)},
      {{3, 2, 1}, Rational(1), Rational(19, 24)},
      {{3, 2, 2}, Rational(0), Rational(1, 6)},
      {{3, 3, 0}, Rational(2, 3), Rational(5, 6)},
      {{3, 3, 1}, Rational(0), Rational(7, 12)},
      {{3, 3, 2}, Rational(1), Rational(5, 6)},
      {{3, 3, 3}, Rational(0), Rational(1, 2)},
  };
  return rows;
}

SeparationPair tabulated_separation_pair() {
  const auto setting = Setting::make(Domain::single_item(), integer_grid(4, 0, 3));
  const KeySpace& keys = setting->keys();
  std::vector<Rational> first(keys.multiset_count());
  std::vector<Rational> second(keys.multiset_count());
  std::vector<bool> seen(keys.multiset_count(), false);
  for (const auto& row : tabulated_separation_rows()) {
    const std::vector<std::size_t> idx{static_cast<std::size_t>(row.key[0]), static_cast<std::size_t>(row.key[1]),
                                       static_cast<std::size_t>(row.key[2])};
    const std::size_t rank = keys.multiset_rank(keys.encode_others(idx));
    first[rank] = row.first;
    second[rank] = row.second;
    seen[rank] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw TotalityError("tabulated separation rows do not cover every multiset");
  }
  return SeparationPair{GrovesMechanism(setting, AnonymousRedistribution{std::move(first)}),
                        GrovesMechanism(setting, AnonymousRedistribution{std::move(second)})};
}

Rational tie_pattern_redistribution(std::span<const Rational> others) {
  if (others.size() != 4) throw ContractViolation("tie-pattern rule needs four other types");
  std::vector<Rational> s(others.begin(), others.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  if (s[0] == s[3]) return Rational(0);
  if (s[0] == s[2]) return s[0] / Rational(4);
  if (s[0] == s[1]) return s[0] / Rational(6);
  if (s[1] == s[2]) return Rational(3) * s[1] / Rational(16);
  return s[1] / Rational(5);
}

SeparationPair tie_pattern_separation_pair(const TypeGrid& grid) {
  if (grid.agents() != 5) throw ContractViolation("tie-pattern pair needs five agents");
  const auto setting = Setting::make(Domain::single_item(), grid);
  auto first = tabulate_anonymous(*setting, [&](std::size_t rank) {
    return tie_pattern_redistribution(setting->others_values(setting->keys().multiset_code(rank)));
  });
  std::vector<Rational> coeffs(4);
  coeffs[1] = Rational(1, 5);
  return SeparationPair{GrovesMechanism(setting, std::move(first)),
                        GrovesMechanism(setting, LinearRedistribution{Rational(0), std::move(coeffs)})};
}

SeparationPair tie_pattern_separation_pair() { return tie_pattern_separation_pair(integer_grid(5, 0, 5)); }

UnequalSharesInstance unequal_shares_instance() {
  std::vector<Rational> values;
  for (long v = 0; v <= 100; v += 10) values.emplace_back(v);
  return UnequalSharesInstance{
      Domain::public_project_general({Rational(10), Rational(40), Rational(50)}),
      TypeGrid(3, std::move(values)),
      0,
      {Rational(10), Rational(70)},
      Rational(10),
  };
}

std::vector<std::string> fixture_names() {
  return {"tabulated_separation", "tie_pattern_separation", "unequal_shares"};
}

Fixture fixture(const std::string& name) {
  if (name == "tabulated_separation") {
    auto pair = tabulated_separation_pair();
    return Fixture{
        name,
        {"first", "second"},
        {pair.first, pair.second},
        {
            {"second collectively dominates first; at (3,2,2,2) the sums are 1/2 and 1", "exact table values"},
            {"first(3,3,2) = 1 > 5/6 = second(3,3,2)", "exact table values"},
            {"second(2,1,0) = 7/24 > 1/12 = first(2,1,0)", "exact table values"},
            {"first is individually undominated on {0,1,2,3}", "every feasibility slack is zero"},
        },
    };
  }
  if (name == "tie_pattern_separation") {
    auto pair = tie_pattern_separation_pair();
    return Fixture{
        name,
        {"tie_pattern", "bailey_cavallo"},
        {pair.first, pair.second},
        {
            {"at (3,2,2,2,2) the sums are 3/2 and 2", "4 * 3*2/16 + 0 versus 4 * 2/5 + 2/5"},
            {"tie_pattern(4,4,4,1) = 1 > 4/5 = bailey_cavallo(4,4,4,1)", "rule evaluation"},
            {"tie_pattern is 0 when all four others tie", "rule evaluation"},
        },
    };
  }
  if (name == "unequal_shares") {
    const auto inst = unequal_shares_instance();
    const GrovesMechanism vcg = GrovesMechanism::vcg(inst.domain, inst.grid);
    return Fixture{
        name,
        {"vcg", "bailey_cavallo"},
        {vcg, bcgc(vcg)},
        {
            {"surplus guarantee of the first agent facing (10,70) under VCG is 10", "grid minimum over own reports"},
            {"bailey_cavallo strictly individually dominates vcg", "exhaustive comparison"},
            {"bailey_cavallo is not pay-only", "exhaustive payment scan"},
        },
    };
  }
  throw ContractViolation("unknown fixture '" + name + "'");
}

}  // namespace groves
