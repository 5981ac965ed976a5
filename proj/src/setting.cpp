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

#include "groves/setting.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "groves/errors.hpp"
#include "groves/parallel.hpp"

namespace groves {

KeySpace::KeySpace(std::size_t agents, std::size_t grid_size)
    : agents_(agents), grid_size_(grid_size) {
  if (agents_ < 2) throw ContractViolation("at least two agents are required");
  if (grid_size_ < 1) throw ContractViolation("empty grid");
  pow_.assign(agents_ + 1, 1);
  for (std::size_t k = 1; k <= agents_; ++k) {
    if (pow_[k - 1] > kMaxProfiles / grid_size_) {
      throw ContractViolation("grid of " + std::to_string(grid_size_) + " values with " +
                              std::to_string(agents_) + " agents exceeds the enumeration limit");
    }
    pow_[k] = pow_[k - 1] * grid_size_;
  }
  const std::size_t count = others_count();
  rank_of_others_.resize(count);
  // Canonical keys (non-increasing digits) in ascending code order.
  for (std::size_t code = 0; code < count; ++code) {
    bool canonical = true;
    for (std::size_t p = 1; p + 1 < agents_ && canonical; ++p) {
      canonical = others_digit(code, p - 1) >= others_digit(code, p);
    }
    if (canonical) {
      rank_of_others_[code] = static_cast<std::uint32_t>(multisets_.size());
      multisets_.push_back(code);
    }
  }
  std::vector<std::size_t> digits;
  for (std::size_t code = 0; code < count; ++code) {
    digits = others_indices(code);
    std::sort(digits.begin(), digits.end(), std::greater<>());
    const std::size_t canon = encode_others(digits);
    rank_of_others_[code] = rank_of_others_[canon];
  }
}

std::vector<std::size_t> KeySpace::profile_indices(std::size_t profile) const {
  std::vector<std::size_t> out(agents_);
  for (std::size_t a = 0; a < agents_; ++a) out[a] = profile_digit(profile, a);
  return out;
}

std::vector<std::size_t> KeySpace::others_indices(std::size_t others) const {
  std::vector<std::size_t> out(agents_ - 1);
  for (std::size_t p = 0; p + 1 < agents_; ++p) out[p] = others_digit(others, p);
  return out;
}

std::size_t KeySpace::encode_profile(std::span<const std::size_t> indices) const {
  std::size_t code = 0;
  for (std::size_t d : indices) code = code * grid_size_ + d;
  return code;
}

std::size_t KeySpace::encode_others(std::span<const std::size_t> indices) const {
  return encode_profile(indices);
}

Setting::Setting(Domain domain, TypeGrid grid)
    : domain_(std::move(domain)), grid_(std::move(grid)), keys_(grid_.agents(), grid_.size()) {
  domain_.validate(grid_);
  total_vcg_.resize(keys_.profile_count());
  std::vector<char> symmetric(keys_.profile_count(), 1);
  parallel_for(keys_.profile_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const auto values = profile_values(p);
      total_vcg_[p] = detail::total_vcg_unchecked(domain_, values);
    }
  });
  parallel_for(keys_.profile_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      auto digits = keys_.profile_indices(p);
      std::sort(digits.begin(), digits.end());
      symmetric[p] = total_vcg_[p] == total_vcg_[keys_.encode_profile(digits)];
    }
  });
  vcg_symmetric_ = std::all_of(symmetric.begin(), symmetric.end(), [](char c) { return c != 0; });
}

std::shared_ptr<const Setting> Setting::make(Domain domain, TypeGrid grid) {
  return std::make_shared<const Setting>(std::move(domain), std::move(grid));
}

Rational Setting::vcg_payment(std::size_t profile, std::size_t agent) const {
  return detail::vcg_payment_unchecked(domain_, profile_values(profile), agent);
}

std::vector<Rational> Setting::profile_values(std::size_t profile) const {
  std::vector<Rational> out;
  out.reserve(agents());
  for (std::size_t a = 0; a < agents(); ++a) out.push_back(grid_.value(keys_.profile_digit(profile, a)));
  return out;
}

std::vector<Rational> Setting::others_values(std::size_t others) const {
  std::vector<Rational> out;
  out.reserve(agents() - 1);
  for (std::size_t p = 0; p + 1 < agents(); ++p) out.push_back(grid_.value(keys_.others_digit(others, p)));
  return out;
}

namespace {

std::size_t encode_values(const TypeGrid& grid, const KeySpace& keys, std::span<const Rational> values,
                          std::size_t expected, const char* what) {
  if (values.size() != expected) {
    throw ContractViolation(std::string(what) + " has " + std::to_string(values.size()) +
                            " entries, expected " + std::to_string(expected));
  }
  std::size_t code = 0;
  for (const auto& v : values) {
    const auto idx = grid.index_of(v);
    if (!idx) throw ContractViolation("type " + v.to_string() + " is not a grid value");
    code = code * keys.grid_size() + *idx;
  }
  return code;
}

}  // namespace

std::size_t Setting::profile_code(std::span<const Rational> profile) const {
  return encode_values(grid_, keys_, profile, agents(), "profile");
}

std::size_t Setting::others_code(std::span<const Rational> others) const {
  return encode_values(grid_, keys_, others, agents() - 1, "others-vector");
}

}  // namespace groves
