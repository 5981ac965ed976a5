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

// Surplus guarantees and the redistribution-improving transforms.
//
// The surplus guarantee of agent i at theta_{-i} is the least total payment
// over all of i's own reports:
//
//   S_i(theta_{-i}) = min_{x in grid} T(x, theta_{-i}).
//
// Infima over the type space become minima over the (finite) grid. Anonymous
// inputs give anonymous outputs when total VCG is permutation independent;
// bcgc_j and priority_improve always produce tabulated mechanisms.

#ifndef GROVES_TRANSFORMS_HPP_
#define GROVES_TRANSFORMS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "groves/mechanism.hpp"
#include "groves/rational.hpp"

namespace groves {

// For linear mechanisms on auction domains the grid minimum is also checked
// against breakpoint_surplus; a mismatch throws std::logic_error.
Rational surplus_guarantee(const GrovesMechanism& mech, std::size_t agent,
                           std::span<const Rational> others);

// Minimum of the total payment over the whole interval [L, U] for a linear
// mechanism on an auction domain. The total payment is piecewise linear in
// the agent's own bid with kinks only at the other bids, so it suffices to
// evaluate at {L, U} and the entries of `others`. Computed from the closed
// forms, without the mechanism's tables. Throws ContractViolation for other
// mechanism kinds or domains.
Rational breakpoint_surplus(const GrovesMechanism& mech, std::size_t agent,
                            std::span<const Rational> others);

// S for every agent and others code.
std::vector<std::vector<Rational>> surplus_table(const GrovesMechanism& mech);
// S by multiset rank. The mechanism must be anonymous and total VCG
// permutation independent (ContractViolation otherwise).
std::vector<Rational> anonymous_surplus_table(const GrovesMechanism& mech);

// r_i + S_i / n for every agent.
GrovesMechanism bcgc(const GrovesMechanism& mech);

// r_agent + S_agent; the other agents are untouched.
GrovesMechanism bcgc_j(const GrovesMechanism& mech, std::size_t agent);

// Priority values are 1..n, lower meaning served earlier. Agents are 0-based.
class PriorityOrder {
 public:
  // priorities[i] is agent i's priority value. Throws ContractViolation
  // unless it is a permutation of 1..n.
  static PriorityOrder from_priorities(std::vector<std::size_t> priorities);
  // Agents listed from highest priority to lowest.
  static PriorityOrder from_sequence(std::vector<std::size_t> agents);
  static PriorityOrder identity(std::size_t agents);

  std::size_t size() const { return sequence_.size(); }
  std::size_t priority(std::size_t agent) const { return priorities_[agent]; }
  // Agent served at position `rank` (0-based).
  std::size_t agent_at(std::size_t rank) const { return sequence_[rank]; }
  const std::vector<std::size_t>& sequence() const { return sequence_; }

 private:
  std::vector<std::size_t> priorities_;
  std::vector<std::size_t> sequence_;
};

// Serves agents in priority order, raising each agent's redistribution to
// the largest value the non-deficit constraint allows given the (already
// updated) tables of the agents before it and the original tables of those
// after it. The result satisfies the undominance equality everywhere.
// Throws DeficitError if `mech` is not non-deficit.
GrovesMechanism priority_improve(const GrovesMechanism& mech, const PriorityOrder& order);

// r' = ((n-1)/n) r + (1/n) min_x { VCG(x, theta_{-i}) - sum_{j != i} r(theta'_{-j}) }.
// Throws ContractViolation for non-anonymous input or a setting whose total
// VCG depends on the agents' order.
GrovesMechanism iterate_step(const GrovesMechanism& mech);

// Largest feasibility slack over all keys (zero exactly at fixed points).
// Same preconditions as iterate_step.
Rational iteration_residual(const GrovesMechanism& mech);

enum class StopReason { fixed_point, residual_bound, step_cap };
std::string_view to_string(StopReason reason);

struct IterationStep {
  std::size_t step;
  GrovesMechanism mechanism;
  Rational residual;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  StopReason reason = StopReason::step_cap;
  // Number of iterate_step applications.
  std::size_t steps_taken() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct IterationResult {
  GrovesMechanism mechanism;
  IterationTrace trace;
};

// Applies iterate_step until the residual is exactly zero, drops to
// `residual_bound` or below, or `max_steps` steps were taken. Throws
// ContractViolation for non-anonymous input and DeficitError for a deficit.
IterationResult iterate_until(const GrovesMechanism& mech, std::size_t max_steps,
                              const Rational& residual_bound = Rational(0));

// Permutation average r'(x) = sum_j sum_{pi} r_j(x^pi) / n!. Requires total
// VCG to be permutation independent (ContractViolation otherwise).
GrovesMechanism anonymize(const GrovesMechanism& mech);

// q(x) = -1 if x is a permutation of `anchor` (n-1 distinct grid values) and
// 2 otherwise. For n >= 3 subtracting q from any non-deficit anonymous r
// keeps it non-deficit and collectively, but not individually, worse.
// Throws ContractViolation for n < 3 or an invalid anchor.
AnonymousRedistribution anchored_perturbation(const TypeGrid& grid, std::span<const Rational> anchor);

}  // namespace groves

#endif  // GROVES_TRANSFORMS_HPP_
