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


#include "groves/oel.hpp"

#include <string>

#include "groves/errors.hpp"
#include "groves/numerics.hpp"

namespace groves {

namespace {

Rational sign_power(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

// (-1)^{m-i} C(n-i-1, n-m-1) / C(m-1, i-1), for 1 <= i <= m.
Rational low_term(long n, long m, long i) {
  return sign_power(m - i) * Rational(binomial(n - i - 1, n - m - 1)) / Rational(binomial(m - 1, i - 1));
}

// (-1)^{m-i-1} C(i-1, m-1) / C(n-m-1, n-i-1), for m+1 <= i <= n-1.
Rational high_term(long n, long m, long i) {
  return sign_power(m - i - 1) * Rational(binomial(i - 1, m - 1)) / Rational(binomial(n - m - 1, n - i - 1));
}

}  // namespace

void OELSpec::validate() const {
  if (units < 1 || units >= agents) {
    throw ContractViolation("OEL needs 1 <= m < n, got m=" + std::to_string(units) +
                            " n=" + std::to_string(agents));
  }
  if (index > agents) {
    throw ContractViolation("OEL index k=" + std::to_string(index) + " exceeds n=" + std::to_string(agents));
  }
  const long diff = static_cast<long>(index) - static_cast<long>(units);
  if (diff % 2 == 0) {
    throw ContractViolation("OEL index k=" + std::to_string(index) + " needs k - m odd (m=" +
                            std::to_string(units) + ")");
  }
  if (!(lower < upper)) throw ContractViolation("OEL bounds need L < U");
}

LinearRedistribution oel_coefficients(const OELSpec& spec) {
  spec.validate();
  const long n = static_cast<long>(spec.agents);
  const long m = static_cast<long>(spec.units);
  const long k = static_cast<long>(spec.index);
  const Rational share = Rational(m) / Rational(n);
  LinearRedistribution out{Rational(0), std::vector<Rational>(spec.agents - 1)};
  auto c = [&](long i) -> Rational& { return out.coefficients[static_cast<std::size_t>(i - 1)]; };

  if (k == 0) {
    Rational sum;
    for (long i = 1; i <= m; ++i) {
      c(i) = low_term(n, m, i);
      sum += c(i);
    }
    out.constant = spec.upper * share - spec.upper * sum;
  } else if (k <= m) {
    Rational sum;
    for (long i = k + 1; i <= m; ++i) {
      c(i) = low_term(n, m, i);
      sum += c(i);
    }
    c(k) = share - sum;
  } else if (k < n) {
    Rational sum;
    for (long i = m + 1; i <= k - 1; ++i) {
      c(i) = high_term(n, m, i);
      sum += c(i);
    }
    c(k) = share - sum;
  } else {
    Rational sum;
    for (long i = m + 1; i <= n - 1; ++i) {
      c(i) = high_term(n, m, i);
      sum += c(i);
    }
    out.constant = spec.lower * share - spec.lower * sum;
  }
  return out;
}

Domain oel_domain(const OELSpec& spec) {
  return spec.units == 1 ? Domain::single_item() : Domain::multi_unit(spec.units);
}

GrovesMechanism oel_mechanism(const OELSpec& spec, const TypeGrid& grid) {
  spec.validate();
  if (grid.agents() != spec.agents) {
    throw ContractViolation("grid has " + std::to_string(grid.agents()) + " agents, OEL spec has " +
                            std::to_string(spec.agents));
  }
  if (grid.lower() != spec.lower || grid.upper() != spec.upper) {
    throw ContractViolation("grid endpoints must be the OEL bounds L=" + spec.lower.to_string() +
                            " and U=" + spec.upper.to_string());
  }
  return GrovesMechanism(oel_domain(spec), grid, oel_coefficients(spec));
}

BudgetScenarioReport oel_budget_scenarios(const OELSpec& spec, const TypeGrid& grid) {
  const GrovesMechanism mech = oel_mechanism(spec, grid);
  const std::size_t n = spec.agents;
  const std::size_t k = spec.index;
  BudgetScenarioReport report;
  for (std::size_t p = 0; p < mech.keys().profile_count(); ++p) {
    const auto values = mech.setting().profile_values(p);
    const SortedVector sorted(values);
    bool in_scenario = false;
    if (k == 0) {
      in_scenario = sorted.at(1) == spec.upper;
    } else if (k < n) {
      in_scenario = sorted.at(k + 1) == sorted.at(k);
    } else {
      in_scenario = sorted.at(n) == spec.lower;
    }
    if (!in_scenario) continue;
    ++report.profiles_checked;
    Rational total = mech.total_payment_at(p);
    if (!total.is_zero() && report.holds) {
      report.holds = false;
      report.witness = Witness{values, std::nullopt, std::nullopt, std::move(total)};
    }
  }
  return report;
}

}  // namespace groves
