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

#ifndef GROVES_SETTING_HPP_
#define GROVES_SETTING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "groves/domain.hpp"
#include "groves/rational.hpp"

namespace groves {

// Integer codes for profiles and others-vectors over a grid of g values.
//
// A profile is n grid indices written as a base-g number with agent 0 as the
// most significant digit, so ascending codes enumerate profiles in
// lexicographic order. An others-vector (theta_{-i}) is the same encoding of
// its n-1 entries in agent order. Multisets of n-1 grid values are ranked by
// their non-increasing index tuple, lexicographically ascending.
class KeySpace {
 public:
  static constexpr std::size_t kMaxProfiles = std::size_t{1} << 22;

  // Throws ContractViolation when g^n exceeds kMaxProfiles.
  KeySpace(std::size_t agents, std::size_t grid_size);

  std::size_t agents() const { return agents_; }
  std::size_t grid_size() const { return grid_size_; }
  std::size_t profile_count() const { return pow_[agents_]; }
  std::size_t others_count() const { return pow_[agents_ - 1]; }
  std::size_t multiset_count() const { return multisets_.size(); }

  std::size_t profile_digit(std::size_t profile, std::size_t agent) const {
    return profile / pow_[agents_ - 1 - agent] % grid_size_;
  }
  std::size_t others_digit(std::size_t others, std::size_t position) const {
    return others / pow_[agents_ - 2 - position] % grid_size_;
  }

  // Profile obtained by giving `agent` type index `type` next to `others`.
  std::size_t insert(std::size_t others, std::size_t agent, std::size_t type) const {
    const std::size_t low_pow = pow_[agents_ - 1 - agent];
    return ((others / low_pow) * grid_size_ + type) * low_pow + others % low_pow;
  }

  // theta_{-agent} of `profile`.
  std::size_t remove(std::size_t profile, std::size_t agent) const {
    const std::size_t low_pow = pow_[agents_ - 1 - agent];
    return (profile / (low_pow * grid_size_)) * low_pow + profile % low_pow;
  }

  std::size_t multiset_rank(std::size_t others) const { return rank_of_others_[others]; }
  // Others code whose digits are the rank's non-increasing index tuple.
  std::size_t multiset_code(std::size_t rank) const { return multisets_[rank]; }

  std::vector<std::size_t> profile_indices(std::size_t profile) const;
  std::vector<std::size_t> others_indices(std::size_t others) const;
  std::size_t encode_profile(std::span<const std::size_t> indices) const;
  std::size_t encode_others(std::span<const std::size_t> indices) const;

  friend bool operator==(const KeySpace& a, const KeySpace& b) {
    return a.agents_ == b.agents_ && a.grid_size_ == b.grid_size_;
  }

 private:
  std::size_t agents_;
  std::size_t grid_size_;
  std::vector<std::size_t> pow_;
  std::vector<std::uint32_t> rank_of_others_;
  std::vector<std::size_t> multisets_;
};

// A domain paired with a grid, plus the cached total VCG payment of every
// grid profile. Shared (immutable) by all mechanisms over the same setting.
class Setting {
 public:
  // Validates the pairing; throws ContractViolation.
  Setting(Domain domain, TypeGrid grid);

  static std::shared_ptr<const Setting> make(Domain domain, TypeGrid grid);

  const Domain& domain() const { return domain_; }
  const TypeGrid& grid() const { return grid_; }
  const KeySpace& keys() const { return keys_; }
  std::size_t agents() const { return grid_.agents(); }

  const Rational& total_vcg(std::size_t profile) const { return total_vcg_[profile]; }
  Rational vcg_payment(std::size_t profile, std::size_t agent) const;

  std::vector<Rational> profile_values(std::size_t profile) const;
  std::vector<Rational> others_values(std::size_t others) const;
  // Throws ContractViolation on wrong length or off-grid values.
  std::size_t profile_code(std::span<const Rational> profile) const;
  std::size_t others_code(std::span<const Rational> others) const;

  // Whether total VCG is invariant under permuting the profile.
  bool vcg_permutation_independent() const { return vcg_symmetric_; }

  friend bool operator==(const Setting& a, const Setting& b) {
    return a.domain_ == b.domain_ && a.grid_ == b.grid_;
  }

 private:
  Domain domain_;
  TypeGrid grid_;
  KeySpace keys_;
  std::vector<Rational> total_vcg_;
  bool vcg_symmetric_ = true;
};

}  // namespace groves

#endif  // GROVES_SETTING_HPP_
