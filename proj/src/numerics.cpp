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

#include "groves/numerics.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "groves/errors.hpp"

namespace groves {

SortedVector::SortedVector(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

const Rational& SortedVector::at(std::size_t j) const {
  if (j < 1 || j > values_.size()) {
    throw ContractViolation("order statistic index " + std::to_string(j) + " outside [1, " +
                            std::to_string(values_.size()) + "]");
  }
  return values_[j - 1];
}

Rational order_statistic(std::span<const Rational> profile, std::size_t j) {
  if (j < 1 || j > profile.size()) {
    throw ContractViolation("order statistic index " + std::to_string(j) + " outside [1, " +
                            std::to_string(profile.size()) + "]");
  }
  std::vector<Rational> copy(profile.begin(), profile.end());
  std::nth_element(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(j - 1), copy.end(),
                   std::greater<>());
  return copy[j - 1];
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string join(std::span<const Rational> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].to_string();
  }
  return out;
}

}  // namespace groves
