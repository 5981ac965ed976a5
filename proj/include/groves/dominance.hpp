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


// The two dominance orders over redistributions, the undominance
// characterization through feasibility slack, and supporting audits.
//
//   a individually dominates b: a_i(x) >= b_i(x) for every agent i and key x,
//                               strictly for at least one.
//   a collectively dominates b: sum_i a_i(theta_{-i}) >= sum_i b_i(theta_{-i})
//                               for every profile, strictly for at least one.

#ifndef GROVES_DOMINANCE_HPP_
#define GROVES_DOMINANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "groves/mechanism.hpp"
#include "groves/rational.hpp"

namespace groves {

enum class Relation { individual, collective };
enum class Comparison { dominates, dominated_by, equal, incomparable };

std::string_view to_string(Relation relation);
std::string_view to_string(Comparison comparison);

// `point` is a profile (collective) or an others key (individual, with the
// agent set). The values are the compared quantities of the two operands.
struct DominanceWitness {
  std::vector<Rational> point;
  std::optional<std::size_t> agent;
  Rational first;
  Rational second;
};

// Relation of the first operand to the second. Witness lists are in
// lexicographic order of (agent, key) or profile and hold at most
// `witness_limit` entries; the counts are always exact.
struct DominanceVerdict {
  Relation relation = Relation::collective;
  Comparison result = Comparison::equal;
  std::vector<DominanceWitness> strict_witnesses;     // first > second
  std::vector<DominanceWitness> violation_witnesses;  // first < second
  std::size_t strict_count = 0;
  std::size_t violation_count = 0;
};

inline constexpr std::size_t kDefaultWitnessLimit = 4096;

// Both operands must share a domain and grid (ContractViolation otherwise).
DominanceVerdict compare_individual(const GrovesMechanism& a, const GrovesMechanism& b,
                                    std::size_t witness_limit = kDefaultWitnessLimit);
DominanceVerdict compare_collective(const GrovesMechanism& a, const GrovesMechanism& b,
                                    std::size_t witness_limit = kDefaultWitnessLimit);

// min_x { VCG(x, others) - sum_{j != i} r_j } - r_i(others). The mechanism is
// non-deficit exactly when every slack is nonnegative.
Rational feasibility_slack(const GrovesMechanism& mech, std::size_t agent,
                           std::span<const Rational> others);
std::vector<std::vector<Rational>> slack_table(const GrovesMechanism& mech);

// Holds iff every slack is exactly zero. The witness is the first nonzero
// slack (profile holds the others key).
Verdict is_individually_undominated(const GrovesMechanism& mech);

// Two-agent project audit of a family of anonymous candidates.
struct TwoAgentCandidate {
  bool non_deficit = false;
  std::optional<Witness> deficit_witness;
  bool nonpositive = false;
  bool is_vcg = false;
  // compare_individual(VCG, candidate); set for non-deficit candidates.
  std::optional<Comparison> vcg_relation;
  bool consistent = false;
};

struct TwoAgentAudit {
  bool vcg_undominated = false;
  std::vector<TwoAgentCandidate> candidates;
  bool holds = false;
};

// Requires a two-agent grid. A non-deficit candidate is consistent when it
// is nonpositive everywhere and either is VCG or is individually dominated
// by VCG; a deficit candidate is consistent when some r(x) > 0 and the
// diagonal profile (x, x) has total payment exactly -2 r(x).
TwoAgentAudit two_agent_vcg_audit(const TypeGrid& grid, const Rational& cost,
                                  std::span<const AnonymousRedistribution> candidates);

// Zero-payment reports: for every key (agent, theta_{-i}) some grid report b
// with VCG_i(b, theta_{-i}) - r_i(theta_{-i}) = 0.
struct PurnAgentReport {
  std::size_t agent = 0;
  bool holds = true;
  std::optional<std::vector<Rational>> failing_others;
  // Reports that give a zero payment at every key of this agent.
  std::vector<Rational> universal_reports;
};

struct PurnVerdict {
  bool holds = true;
  std::vector<PurnAgentReport> agents;
};

PurnVerdict purn_condition(const GrovesMechanism& mech);

// Randomized search for an anonymous non-deficit mechanism that collectively
// dominates `base`. Each candidate is a sparse direction d over the anonymous
// table; if sum_i d(theta_{-i}) is nonnegative with a positive entry, the
// largest feasible step t* = min T(theta) / D(theta) is taken and the result
// is a dominator whenever t* > 0.
struct SearchOptions {
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  std::size_t max_support = 4;
};

struct SearchReport {
  std::size_t candidates = 0;
  // Directions whose induced profile sums were nonnegative and nonzero.
  std::size_t improving_directions = 0;
  std::size_t dominators = 0;
  std::optional<GrovesMechanism> first_dominator;
};

// `base` must be anonymous and non-deficit (ContractViolation / DeficitError).
SearchReport search_collective_dominator(const GrovesMechanism& base, const SearchOptions& options = {});

}  // namespace groves

#endif  // GROVES_DOMINANCE_HPP_
