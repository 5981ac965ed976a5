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

#include "groves/domain.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "groves/errors.hpp"
#include "groves/numerics.hpp"

namespace groves {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Agent indices ordered by (type descending, index ascending).
std::vector<std::size_t> bid_order(std::span<const Rational> profile) {
  std::vector<std::size_t> order(profile.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return profile[a] > profile[b]; });
  return order;
}

Rational project_share(const Domain& domain, std::size_t agent, std::size_t agents) {
  return domain.share(agent, agents);
}

Rational project_welfare(const Domain& domain, std::span<const Rational> profile) {
  Rational w;
  for (std::size_t j = 0; j < profile.size(); ++j) w += profile[j] - project_share(domain, j, profile.size());
  return w;
}

}  // namespace

TypeGrid::TypeGrid(std::size_t agents, std::vector<Rational> values)
    : agents_(agents), values_(std::move(values)) {
  if (agents_ < 2) throw ContractViolation("a type grid needs at least two agents");
  if (values_.empty()) throw ContractViolation("a type grid needs at least one value");
  for (std::size_t j = 1; j < values_.size(); ++j) {
    if (!(values_[j - 1] < values_[j])) {
      throw ContractViolation("grid values must be strictly increasing (at position " +
                              std::to_string(j) + ")");
    }
  }
}

TypeGrid::TypeGrid(std::size_t agents, std::vector<Rational> values, const Rational& lower,
                   const Rational& upper)
    : TypeGrid(agents, std::move(values)) {
  if (lower != this->lower() || upper != this->upper()) {
    throw ContractViolation("grid bounds [" + lower.to_string() + ", " + upper.to_string() +
                            "] must coincide with the grid endpoints [" +
                            this->lower().to_string() + ", " + this->upper().to_string() + "]");
  }
}

std::optional<std::size_t> TypeGrid::index_of(const Rational& x) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), x);
  if (it == values_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

TypeGrid integer_grid(std::size_t agents, long first, long last) {
  std::vector<Rational> values;
  for (long v = first; v <= last; ++v) values.emplace_back(v);
  return TypeGrid(agents, std::move(values));
}

Domain Domain::single_item() { return Domain(SingleItem{}); }

Domain Domain::multi_unit(std::size_t units) {
  if (units < 1) throw ContractViolation("a multi-unit auction needs at least one unit");
  return Domain(MultiUnit{units});
}

Domain Domain::public_project_equal(const Rational& cost) {
  if (cost.sign() <= 0) throw ContractViolation("project cost must be positive");
  return Domain(PublicProjectEqual{cost});
}

Domain Domain::public_project_general(std::vector<Rational> shares) {
  if (shares.empty()) throw ContractViolation("a general project needs cost shares");
  for (const auto& s : shares) {
    if (s.sign() <= 0) throw ContractViolation("cost shares must be positive");
  }
  return Domain(PublicProjectGeneral{std::move(shares)});
}

std::string_view Domain::kind() const {
  return std::visit(overloaded{
                        [](const SingleItem&) { return std::string_view("single_item"); },
                        [](const MultiUnit&) { return std::string_view("multi_unit"); },
                        [](const PublicProjectEqual&) { return std::string_view("public_project_equal"); },
                        [](const PublicProjectGeneral&) {
                          return std::string_view("public_project_general");
                        },
                    },
                    variant_);
}

std::string Domain::describe() const {
  return std::visit(
      overloaded{
          [](const SingleItem&) { return std::string("single-item auction"); },
          [](const MultiUnit& d) { return std::to_string(d.units) + "-unit auction (unit demand)"; },
          [](const PublicProjectEqual& d) {
            return "public project, cost " + d.cost.to_string() + ", equal shares";
          },
          [](const PublicProjectGeneral& d) {
            return "public project, shares (" + join(d.shares) + ")";
          },
      },
      variant_);
}

bool Domain::is_auction() const {
  return std::holds_alternative<SingleItem>(variant_) || std::holds_alternative<MultiUnit>(variant_);
}

std::size_t Domain::units() const {
  if (std::holds_alternative<SingleItem>(variant_)) return 1;
  if (const auto* d = std::get_if<MultiUnit>(&variant_)) return d->units;
  throw ContractViolation("units() queried on a public project domain");
}

Rational Domain::cost() const {
  if (const auto* d = std::get_if<PublicProjectEqual>(&variant_)) return d->cost;
  if (const auto* d = std::get_if<PublicProjectGeneral>(&variant_)) {
    Rational total;
    for (const auto& s : d->shares) total += s;
    return total;
  }
  throw ContractViolation("cost() queried on an auction domain");
}

Rational Domain::share(std::size_t agent, std::size_t agents) const {
  if (const auto* d = std::get_if<PublicProjectEqual>(&variant_)) return d->cost / Rational(agents);
  if (const auto* d = std::get_if<PublicProjectGeneral>(&variant_)) return d->shares.at(agent);
  throw ContractViolation("share() queried on an auction domain");
}

void Domain::validate(const TypeGrid& grid) const {
  const std::size_t n = grid.agents();
  if (is_auction()) {
    if (units() >= n) {
      throw ContractViolation("auction with " + std::to_string(units()) + " units needs more than " +
                              std::to_string(units()) + " agents");
    }
    if (grid.lower().sign() < 0) throw ContractViolation("auction types must be nonnegative");
    return;
  }
  if (const auto* d = std::get_if<PublicProjectGeneral>(&variant_)) {
    if (d->shares.size() != n) {
      throw ContractViolation("general project has " + std::to_string(d->shares.size()) +
                              " shares for " + std::to_string(n) + " agents");
    }
  }
  const Rational c = cost();
  if (grid.lower().sign() < 0 || grid.upper() > c) {
    throw ContractViolation("project types must lie in [0, " + c.to_string() + "]");
  }
}

void validate_profile(const TypeGrid& grid, std::span<const Rational> profile) {
  if (profile.size() != grid.agents()) {
    throw ContractViolation("profile has " + std::to_string(profile.size()) + " entries, expected " +
                            std::to_string(grid.agents()));
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (!grid.contains(profile[i])) {
      throw ContractViolation("type " + profile[i].to_string() + " of agent " + std::to_string(i) +
                              " is not a grid value");
    }
  }
}

Decision outcome(const Domain& domain, const TypeGrid& grid, std::span<const Rational> profile) {
  validate_profile(grid, profile);
  if (domain.is_auction()) {
    auto order = bid_order(profile);
    const std::size_t m = std::min(domain.units(), profile.size());
    std::vector<std::size_t> winners(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(winners.begin(), winners.end());
    return Allocation{std::move(winners)};
  }
  return ProjectChoice{project_welfare(domain, profile).sign() >= 0};
}

Rational valuation(const Domain& domain, std::size_t agents, const Decision& decision,
                   std::size_t agent, const Rational& type) {
  if (domain.is_auction()) {
    const auto* alloc = std::get_if<Allocation>(&decision);
    if (!alloc) throw ContractViolation("auction valuation needs an allocation");
    const bool wins = std::binary_search(alloc->winners.begin(), alloc->winners.end(), agent);
    return wins ? type : Rational(0);
  }
  const auto* choice = std::get_if<ProjectChoice>(&decision);
  if (!choice) throw ContractViolation("project valuation needs a build/cancel decision");
  return choice->build ? type - domain.share(agent, agents) : Rational(0);
}

Rational vcg_payment(const Domain& domain, const TypeGrid& grid,
                     std::span<const Rational> profile, std::size_t agent) {
  validate_profile(grid, profile);
  if (agent >= profile.size()) throw ContractViolation("agent index out of range");
  return detail::vcg_payment_unchecked(domain, profile, agent);
}

Rational total_vcg(const Domain& domain, const TypeGrid& grid, std::span<const Rational> profile) {
  validate_profile(grid, profile);
  return detail::total_vcg_unchecked(domain, profile);
}

namespace detail {

Rational vcg_payment_unchecked(const Domain& domain, std::span<const Rational> profile,
                               std::size_t agent) {
  if (domain.is_auction()) {
    const std::size_t m = domain.units();
    const auto order = bid_order(profile);
    for (std::size_t r = 0; r < m; ++r) {
      if (order[r] == agent) return profile[order[m]];
    }
    return Rational(0);
  }
  const Rational welfare = project_welfare(domain, profile);
  const Rational others = welfare - (profile[agent] - domain.share(agent, profile.size()));
  Rational best_without = others.sign() > 0 ? others : Rational(0);
  return welfare.sign() >= 0 ? best_without - others : best_without;
}

Rational total_vcg_unchecked(const Domain& domain, std::span<const Rational> profile) {
  if (domain.is_auction()) {
    const std::size_t m = domain.units();
    return Rational(m) * order_statistic(profile, m + 1);
  }
  Rational total;
  for (std::size_t i = 0; i < profile.size(); ++i) total += vcg_payment_unchecked(domain, profile, i);
  return total;
}

}  // namespace detail
}  // namespace groves
