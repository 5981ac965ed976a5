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

#include "groves/mechanism.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "groves/errors.hpp"
#include "groves/numerics.hpp"
#include "groves/parallel.hpp"

namespace groves {

Rational evaluate_linear(const LinearRedistribution& r, std::span<const Rational> others) {
  if (r.coefficients.size() != others.size()) {
    throw ContractViolation("linear redistribution has " + std::to_string(r.coefficients.size()) +
                            " coefficients for " + std::to_string(others.size()) + " other agents");
  }
  std::vector<Rational> sorted(others.begin(), others.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Rational out = r.constant;
  for (std::size_t j = 0; j < sorted.size(); ++j) out += r.coefficients[j] * sorted[j];
  return out;
}

GrovesMechanism::GrovesMechanism(Domain domain, TypeGrid grid, Redistribution redistribution)
    : GrovesMechanism(Setting::make(std::move(domain), std::move(grid)), std::move(redistribution)) {}

GrovesMechanism::GrovesMechanism(std::shared_ptr<const Setting> setting, Redistribution redistribution)
    : setting_(std::move(setting)), redistribution_(std::move(redistribution)) {
  if (!setting_) throw ContractViolation("mechanism without a setting");
  const KeySpace& keys = setting_->keys();
  const std::size_t n = setting_->agents();
  if (const auto* t = std::get_if<TabulatedRedistribution>(&redistribution_)) {
    if (t->tables.size() != n) {
      throw TotalityError("tabulated redistribution has " + std::to_string(t->tables.size()) +
                          " agent tables, expected " + std::to_string(n));
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (t->tables[a].size() != keys.others_count()) {
        throw TotalityError("table of agent " + std::to_string(a) + " has " +
                            std::to_string(t->tables[a].size()) + " entries, expected " +
                            std::to_string(keys.others_count()));
      }
    }
  } else if (const auto* t = std::get_if<AnonymousRedistribution>(&redistribution_)) {
    if (t->table.size() != keys.multiset_count()) {
      throw TotalityError("anonymous table has " + std::to_string(t->table.size()) +
                          " entries, expected " + std::to_string(keys.multiset_count()));
    }
    anonymous_values_ = t->table;
  } else {
    const auto& lin = std::get<LinearRedistribution>(redistribution_);
    if (lin.coefficients.size() != n - 1) {
      throw ContractViolation("linear redistribution needs " + std::to_string(n - 1) + " coefficients");
    }
    anonymous_values_.resize(keys.multiset_count());
    for (std::size_t rank = 0; rank < keys.multiset_count(); ++rank) {
      anonymous_values_[rank] = evaluate_linear(lin, setting_->others_values(keys.multiset_code(rank)));
    }
  }
}

GrovesMechanism GrovesMechanism::vcg(std::shared_ptr<const Setting> setting) {
  const std::size_t n = setting->agents();
  return GrovesMechanism(std::move(setting),
                         LinearRedistribution{Rational(0), std::vector<Rational>(n - 1)});
}

GrovesMechanism GrovesMechanism::vcg(Domain domain, TypeGrid grid) {
  return vcg(Setting::make(std::move(domain), std::move(grid)));
}

Rational GrovesMechanism::redistribution_total(std::size_t profile) const {
  const KeySpace& keys = setting_->keys();
  Rational sum;
  for (std::size_t a = 0; a < agents(); ++a) sum += r(a, keys.remove(profile, a));
  return sum;
}

TabulatedRedistribution GrovesMechanism::tabulated() const {
  if (const auto* t = std::get_if<TabulatedRedistribution>(&redistribution_)) return *t;
  return tabulate(*setting_, [&](std::size_t a, std::size_t o) { return r(a, o); });
}

TabulatedRedistribution tabulate(const Setting& setting,
                                 const std::function<Rational(std::size_t, std::size_t)>& fn) {
  TabulatedRedistribution out;
  out.tables.assign(setting.agents(), std::vector<Rational>(setting.keys().others_count()));
  for (std::size_t a = 0; a < setting.agents(); ++a) {
    for (std::size_t o = 0; o < setting.keys().others_count(); ++o) out.tables[a][o] = fn(a, o);
  }
  return out;
}

AnonymousRedistribution tabulate_anonymous(const Setting& setting,
                                           const std::function<Rational(std::size_t)>& fn) {
  AnonymousRedistribution out;
  out.table.resize(setting.keys().multiset_count());
  for (std::size_t rank = 0; rank < out.table.size(); ++rank) out.table[rank] = fn(rank);
  return out;
}

Rational redistribute(const GrovesMechanism& mech, std::size_t agent, std::span<const Rational> others) {
  if (agent >= mech.agents()) throw ContractViolation("agent index out of range");
  return mech.r(agent, mech.setting().others_code(others));
}

Rational payment(const GrovesMechanism& mech, std::span<const Rational> profile, std::size_t agent) {
  if (agent >= mech.agents()) throw ContractViolation("agent index out of range");
  const std::size_t code = mech.setting().profile_code(profile);
  return mech.setting().vcg_payment(code, agent) - mech.r(agent, mech.keys().remove(code, agent));
}

Rational total_payment(const GrovesMechanism& mech, std::span<const Rational> profile) {
  return mech.total_payment_at(mech.setting().profile_code(profile));
}

Rational utility(const GrovesMechanism& mech, std::span<const Rational> profile, std::size_t agent) {
  const Decision d = outcome(mech.domain(), mech.grid(), profile);
  return valuation(mech.domain(), mech.agents(), d, agent, profile[agent]) - payment(mech, profile, agent);
}

bool is_budget_balanced_at(const GrovesMechanism& mech, std::span<const Rational> profile) {
  return total_payment(mech, profile).is_zero();
}

Verdict is_non_deficit(const GrovesMechanism& mech) {
  const std::size_t count = mech.keys().profile_count();
  std::vector<Rational> totals(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) totals[p] = mech.total_payment_at(p);
  });
  for (std::size_t p = 0; p < count; ++p) {
    if (totals[p].sign() < 0) {
      return Verdict{false, Witness{mech.setting().profile_values(p), std::nullopt, std::nullopt, totals[p]}};
    }
  }
  return {};
}

Verdict is_pay_only(const GrovesMechanism& mech) {
  const KeySpace& keys = mech.keys();
  for (std::size_t p = 0; p < keys.profile_count(); ++p) {
    const auto values = mech.setting().profile_values(p);
    for (std::size_t a = 0; a < mech.agents(); ++a) {
      Rational t = detail::vcg_payment_unchecked(mech.domain(), values, a) - mech.r(a, keys.remove(p, a));
      if (t.sign() < 0) return Verdict{false, Witness{values, a, std::nullopt, std::move(t)}};
    }
  }
  return {};
}

Verdict is_strategy_proof(const Setting& setting, const PaymentRule& rule) {
  const KeySpace& keys = setting.keys();
  const Domain& domain = setting.domain();
  const TypeGrid& grid = setting.grid();
  const std::size_t n = setting.agents();
  for (std::size_t p = 0; p < keys.profile_count(); ++p) {
    const auto truth = setting.profile_values(p);
    const Decision truthful = outcome(domain, grid, truth);
    for (std::size_t a = 0; a < n; ++a) {
      const Rational honest = valuation(domain, n, truthful, a, truth[a]) - rule(truth, a);
      auto report = truth;
      for (std::size_t x = 0; x < grid.size(); ++x) {
        if (x == keys.profile_digit(p, a)) continue;
        report[a] = grid.value(x);
        const Decision d = outcome(domain, grid, report);
        Rational gain = valuation(domain, n, d, a, truth[a]) - rule(report, a) - honest;
        if (gain.sign() > 0) return Verdict{false, Witness{truth, a, grid.value(x), std::move(gain)}};
      }
    }
  }
  return {};
}

Verdict is_strategy_proof(const GrovesMechanism& mech) {
  return is_strategy_proof(mech.setting(), [&](std::span<const Rational> reported, std::size_t agent) {
    const std::size_t code = mech.setting().profile_code(reported);
    return mech.setting().vcg_payment(code, agent) - mech.r(agent, mech.keys().remove(code, agent));
  });
}

GrovesMechanism add_redistribution(const GrovesMechanism& mech, const Redistribution& delta,
                                   const Rational& scale) {
  const GrovesMechanism other(mech.shared_setting(), delta);
  if (mech.is_anonymous() && other.is_anonymous()) {
    return GrovesMechanism(mech.shared_setting(),
                           tabulate_anonymous(mech.setting(), [&](std::size_t rank) {
                             return mech.anonymous_values()[rank] + scale * other.anonymous_values()[rank];
                           }));
  }
  return GrovesMechanism(mech.shared_setting(),
                         tabulate(mech.setting(), [&](std::size_t a, std::size_t o) {
                           return mech.r(a, o) + scale * other.r(a, o);
                         }));
}

}  // namespace groves
