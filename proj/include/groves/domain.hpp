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

// Decision problems over a finite type grid shared by all agents.
//
// Agents are numbered from 0 in the C++ API. Every domain supplies the
// efficient outcome rule, the agents' valuations for an outcome and the
// VCG (Clarke) payments, which are always nonnegative.

#ifndef GROVES_DOMAIN_HPP_
#define GROVES_DOMAIN_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Finite, strictly increasing set of admissible types. The bounds L and U are
// the grid endpoints.
class TypeGrid {
 public:
  // Throws ContractViolation unless agents >= 2 and values are nonempty and
  // strictly increasing.
  TypeGrid(std::size_t agents, std::vector<Rational> values);

  // As above, additionally requiring lower == min(values), upper == max(values).
  TypeGrid(std::size_t agents, std::vector<Rational> values, const Rational& lower,
           const Rational& upper);

  std::size_t agents() const { return agents_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(std::size_t index) const { return values_[index]; }
  const Rational& lower() const { return values_.front(); }
  const Rational& upper() const { return values_.back(); }

  std::optional<std::size_t> index_of(const Rational& x) const;
  bool contains(const Rational& x) const { return index_of(x).has_value(); }

  friend bool operator==(const TypeGrid&, const TypeGrid&) = default;

 private:
  std::size_t agents_;
  std::vector<Rational> values_;
};

// Convenience: grid {first, first+1, ..., last}.
TypeGrid integer_grid(std::size_t agents, long first, long last);

struct SingleItem {
  friend bool operator==(const SingleItem&, const SingleItem&) = default;
};

// m identical units, unit-demand bidders.
struct MultiUnit {
  std::size_t units;
  friend bool operator==(const MultiUnit&, const MultiUnit&) = default;
};

// Project of cost c, each agent contributes c/n if it is built.
struct PublicProjectEqual {
  Rational cost;
  friend bool operator==(const PublicProjectEqual&, const PublicProjectEqual&) = default;
};

// Project whose cost is split into per-agent shares c_i > 0.
struct PublicProjectGeneral {
  std::vector<Rational> shares;
  friend bool operator==(const PublicProjectGeneral&, const PublicProjectGeneral&) = default;
};

class Domain {
 public:
  using Variant = std::variant<SingleItem, MultiUnit, PublicProjectEqual, PublicProjectGeneral>;

  static Domain single_item();
  static Domain multi_unit(std::size_t units);
  static Domain public_project_equal(const Rational& cost);
  static Domain public_project_general(std::vector<Rational> shares);

  const Variant& variant() const { return variant_; }

  // "single_item", "multi_unit", "public_project_equal", "public_project_general".
  std::string_view kind() const;
  std::string describe() const;

  bool is_auction() const;
  // Units for sale; 1 for a single item. Throws ContractViolation for projects.
  std::size_t units() const;
  // Project cost. Throws ContractViolation for auctions.
  Rational cost() const;
  // Agent's cost share if the project is built.
  Rational share(std::size_t agent, std::size_t agents) const;

  // Throws ContractViolation when the domain cannot be paired with `grid`:
  // auctions need m < n and nonnegative types; projects need types in [0, c];
  // general projects need exactly n shares.
  void validate(const TypeGrid& grid) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  explicit Domain(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

// Winners of the units, ascending agent index.
struct Allocation {
  std::vector<std::size_t> winners;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct ProjectChoice {
  bool build;
  friend bool operator==(const ProjectChoice&, const ProjectChoice&) = default;
};

using Decision = std::variant<Allocation, ProjectChoice>;

// Efficient decision for `profile`. Auction ties go to the lowest agent index;
// a project whose reported total equals its cost is built. Throws
// ContractViolation if the profile has the wrong length or leaves the grid.
Decision outcome(const Domain& domain, const TypeGrid& grid, std::span<const Rational> profile);

// Agent's initial utility for `decision` given its type.
Rational valuation(const Domain& domain, std::size_t agents, const Decision& decision,
                   std::size_t agent, const Rational& type);

// max_d sum_{j != i} v_j(d) - sum_{j != i} v_j(f(profile)).
Rational vcg_payment(const Domain& domain, const TypeGrid& grid,
                     std::span<const Rational> profile, std::size_t agent);

Rational total_vcg(const Domain& domain, const TypeGrid& grid, std::span<const Rational> profile);

// Checks length and grid membership; throws ContractViolation.
void validate_profile(const TypeGrid& grid, std::span<const Rational> profile);

namespace detail {
// Unchecked variants used by the enumeration loops.
Rational vcg_payment_unchecked(const Domain& domain, std::span<const Rational> profile,
                               std::size_t agent);
Rational total_vcg_unchecked(const Domain& domain, std::span<const Rational> profile);
}  // namespace detail

}  // namespace groves

#endif  // GROVES_DOMAIN_HPP_
