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

// Groves mechanisms written as VCG plus a redistribution:
//
//   t_i(theta) = VCG_i(theta) - r_i(theta_{-i}).
//
// Because r_i never reads agent i's own report, every mechanism built here is
// strategy-proof; the property checks below verify the remaining properties
// by exhaustive enumeration of the grid.

#ifndef GROVES_MECHANISM_HPP_
#define GROVES_MECHANISM_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "groves/domain.hpp"
#include "groves/rational.hpp"
#include "groves/setting.hpp"

namespace groves {

// One table per agent, indexed by the KeySpace others code of theta_{-i}
// (agent order, skipping i).
struct TabulatedRedistribution {
  std::vector<std::vector<Rational>> tables;
  friend bool operator==(const TabulatedRedistribution&, const TabulatedRedistribution&) = default;
};

// A single permutation-independent table indexed by KeySpace multiset rank.
struct AnonymousRedistribution {
  std::vector<Rational> table;
  friend bool operator==(const AnonymousRedistribution&, const AnonymousRedistribution&) = default;
};

// r(theta_{-i}) = constant + sum_j coefficients[j-1] * [theta_{-i}]_j.
struct LinearRedistribution {
  Rational constant;
  std::vector<Rational> coefficients;
  friend bool operator==(const LinearRedistribution&, const LinearRedistribution&) = default;
};

using Redistribution =
    std::variant<TabulatedRedistribution, AnonymousRedistribution, LinearRedistribution>;

Rational evaluate_linear(const LinearRedistribution& r, std::span<const Rational> others);

class GrovesMechanism {
 public:
  // Throws ContractViolation for an invalid setting and TotalityError when a
  // table does not cover every key.
  GrovesMechanism(Domain domain, TypeGrid grid, Redistribution redistribution);
  GrovesMechanism(std::shared_ptr<const Setting> setting, Redistribution redistribution);

  // The all-zero redistribution.
  static GrovesMechanism vcg(std::shared_ptr<const Setting> setting);
  static GrovesMechanism vcg(Domain domain, TypeGrid grid);

  const Setting& setting() const { return *setting_; }
  const std::shared_ptr<const Setting>& shared_setting() const { return setting_; }
  const Domain& domain() const { return setting_->domain(); }
  const TypeGrid& grid() const { return setting_->grid(); }
  const KeySpace& keys() const { return setting_->keys(); }
  std::size_t agents() const { return setting_->agents(); }

  const Redistribution& redistribution() const { return redistribution_; }
  bool is_anonymous() const { return !std::holds_alternative<TabulatedRedistribution>(redistribution_); }

  // r_agent at an others code.
  const Rational& r(std::size_t agent, std::size_t others) const {
    if (const auto* t = std::get_if<TabulatedRedistribution>(&redistribution_)) {
      return t->tables[agent][others];
    }
    return anonymous_values_[setting_->keys().multiset_rank(others)];
  }

  // Anonymous table by multiset rank; empty for tabulated mechanisms.
  const std::vector<Rational>& anonymous_values() const { return anonymous_values_; }

  Rational redistribution_total(std::size_t profile) const;
  Rational total_payment_at(std::size_t profile) const {
    return setting_->total_vcg(profile) - redistribution_total(profile);
  }

  // Same setting, tables expanded to the tabulated form.
  TabulatedRedistribution tabulated() const;

 private:
  std::shared_ptr<const Setting> setting_;
  Redistribution redistribution_;
  std::vector<Rational> anonymous_values_;
};

// Value-based access. `others` is theta_{-i} in agent order.
Rational redistribute(const GrovesMechanism& mech, std::size_t agent, std::span<const Rational> others);
Rational payment(const GrovesMechanism& mech, std::span<const Rational> profile, std::size_t agent);
Rational total_payment(const GrovesMechanism& mech, std::span<const Rational> profile);
Rational utility(const GrovesMechanism& mech, std::span<const Rational> profile, std::size_t agent);
bool is_budget_balanced_at(const GrovesMechanism& mech, std::span<const Rational> profile);

// Result of an exhaustive check. On failure `witness` holds the
// lexicographically first offending profile (or key), plus the agent and
// deviation where applicable; `value` is the offending quantity.
struct Witness {
  std::vector<Rational> profile;
  std::optional<std::size_t> agent;
  std::optional<Rational> deviation;
  Rational value;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return holds; }
};

// Total payment >= 0 at every grid profile; witness value is the total.
Verdict is_non_deficit(const GrovesMechanism& mech);
// Every payment >= 0; witness value is the payment.
Verdict is_pay_only(const GrovesMechanism& mech);

// Payment as a function of the reported profile. Used to audit rules that
// are not expressed as a redistribution, e.g. ones that peek at own type.
using PaymentRule = std::function<Rational(std::span<const Rational> reported, std::size_t agent)>;

// Truthful utility >= utility of every grid misreport; witness value is the
// gain from the deviation.
Verdict is_strategy_proof(const GrovesMechanism& mech);
Verdict is_strategy_proof(const Setting& setting, const PaymentRule& rule);

// mech.r with `scale * delta` added; anonymous iff both operands are.
GrovesMechanism add_redistribution(const GrovesMechanism& mech, const Redistribution& delta,
                                   const Rational& scale = Rational(1));

// Builds a tabulated redistribution from fn(agent, others_code).
TabulatedRedistribution tabulate(const Setting& setting,
                                 const std::function<Rational(std::size_t, std::size_t)>& fn);
// Builds an anonymous redistribution from fn(multiset_rank).
AnonymousRedistribution tabulate_anonymous(const Setting& setting,
                                           const std::function<Rational(std::size_t)>& fn);

}  // namespace groves

#endif  // GROVES_MECHANISM_HPP_
