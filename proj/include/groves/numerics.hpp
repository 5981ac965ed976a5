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

#ifndef GROVES_NUMERICS_HPP_
#define GROVES_NUMERICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Values kept in non-increasing order; element j (1-based) is the j-th
// highest entry counting multiplicity.
class SortedVector {
 public:
  SortedVector() = default;
  explicit SortedVector(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  // 1-based order statistic. Throws ContractViolation when out of range.
  const Rational& at(std::size_t j) const;

 private:
  std::vector<Rational> values_;
};

// j-th largest element of `profile` (1-based, counting multiplicity).
// Throws ContractViolation unless 1 <= j <= profile.size().
Rational order_statistic(std::span<const Rational> profile, std::size_t j);

// C(n, k), zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

// Joins the canonical string forms with `sep`.
std::string join(std::span<const Rational> values, std::string_view sep = ",");

}  // namespace groves

#endif  // GROVES_NUMERICS_HPP_
