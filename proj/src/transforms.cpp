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


#include "groves/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "groves/errors.hpp"
#include "groves/numerics.hpp"
#include "groves/parallel.hpp"

namespace groves {

namespace {

void require_agent(const GrovesMechanism& mech, std::size_t agent) {
  if (agent >= mech.agents()) {
    throw ContractViolation("agent " + std::to_string(agent) + " out of range for " +
                            std::to_string(mech.agents()) + " agents");
  }
}

void require_anonymous(const GrovesMechanism& mech, const char* op) {
  if (!mech.is_anonymous()) throw ContractViolation(std::string(op) + " needs an anonymous mechanism");
}

void require_symmetric(const GrovesMechanism& mech, const char* op) {
  require_anonymous(mech, op);
  if (!mech.setting().vcg_permutation_independent()) {
    throw ContractViolation(std::string(op) + " needs a permutation-independent total VCG payment");
  }
}

void require_non_deficit(const GrovesMechanism& mech) {
  const Verdict v = is_non_deficit(mech);
  if (!v) throw DeficitError(v.witness->profile, v.witness->value);
}

// min_x { VCG(x, o) - sum_{j != agent} r_j((x, o)_{-j}) } over the grid.
Rational others_constrained_min(const GrovesMechanism& mech, const TabulatedRedistribution* tables,
                                std::size_t agent, std::size_t others) {
  const KeySpace& keys = mech.keys();
  const std::size_t n = mech.agents();
  Rational best;
  for (std::size_t x = 0; x < keys.grid_size(); ++x) {
    const std::size_t p = keys.insert(others, agent, x);
    Rational v = mech.setting().total_vcg(p);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == agent) continue;
      const std::size_t oj = keys.remove(p, j);
      v -= tables ? tables->tables[j][oj] : mech.r(j, oj);
    }
    if (x == 0 || v < best) best = std::move(v);
  }
  return best;
}

Rational grid_surplus(const GrovesMechanism& mech, std::size_t agent, std::size_t others) {
  const KeySpace& keys = mech.keys();
  Rational best;
  for (std::size_t x = 0; x < keys.grid_size(); ++x) {
    Rational t = mech.total_payment_at(keys.insert(others, agent, x));
    if (x == 0 || t < best) best = std::move(t);
  }
  return best;
}

}  // namespace

Rational breakpoint_surplus(const GrovesMechanism& mech, std::size_t agent,
                            std::span<const Rational> others) {
  require_agent(mech, agent);
  const auto* lin = std::get_if<LinearRedistribution>(&mech.redistribution());
  if (lin == nullptr || !mech.domain().is_auction()) {
    throw ContractViolation("breakpoint surplus needs a linear mechanism on an auction domain");
  }
  const std::size_t n = mech.agents();
  if (others.size() != n - 1) throw ContractViolation("others vector has the wrong length");
  const std::size_t m = mech.domain().units();
  std::vector<Rational> candidates{mech.grid().lower(), mech.grid().upper()};
  candidates.insert(candidates.end(), others.begin(), others.end());

  std::vector<Rational> profile(n);
  std::vector<Rational> rest(n - 1);
  Rational best;
  bool first = true;
  for (const Rational& x : candidates) {
    if (x < mech.grid().lower() || x > mech.grid().upper()) continue;
    for (std::size_t j = 0, k = 0; j < n; ++j) profile[j] = j == agent ? x : others[k++];
    Rational t = Rational(static_cast<long>(m)) * order_statistic(profile, m + 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0, k = 0; a < n; ++a) {
        if (a != j) rest[k++] = profile[a];
      }
      t -= evaluate_linear(*lin, rest);
    }
    if (first || t < best) best = std::move(t);
    first = false;
  }
  return best;
}

Rational surplus_guarantee(const GrovesMechanism& mech, std::size_t agent,
                           std::span<const Rational> others) {
  require_agent(mech, agent);
  Rational s = grid_surplus(mech, agent, mech.setting().others_code(others));
  if (std::holds_alternative<LinearRedistribution>(mech.redistribution()) && mech.domain().is_auction()) {
    const Rational b = breakpoint_surplus(mech, agent, others);
    if (b != s) {
      throw std::logic_error("grid surplus " + s.to_string() + " disagrees with breakpoint surplus " +
                             b.to_string());
    }
  }
  return s;
}

std::vector<std::vector<Rational>> surplus_table(const GrovesMechanism& mech) {
  const KeySpace& keys = mech.keys();
  const std::size_t n = mech.agents();
  std::vector<Rational> totals(keys.profile_count());
  parallel_for(totals.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) totals[p] = mech.total_payment_at(p);
  });
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(keys.others_count()));
  parallel_for(keys.others_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t o = begin; o < end; ++o) {
      for (std::size_t a = 0; a < n; ++a) {
        Rational best = totals[keys.insert(o, a, 0)];
        for (std::size_t x = 1; x < keys.grid_size(); ++x) {
          const Rational& t = totals[keys.insert(o, a, x)];
          if (t < best) best = t;
        }
        out[a][o] = std::move(best);
      }
    }
  });
  return out;
}

std::vector<Rational> anonymous_surplus_table(const GrovesMechanism& mech) {
  require_symmetric(mech, "anonymous_surplus_table");
  const KeySpace& keys = mech.keys();
  std::vector<Rational> out(keys.multiset_count());
  parallel_for(out.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t rank = begin; rank < end; ++rank) {
      out[rank] = grid_surplus(mech, 0, keys.multiset_code(rank));
    }
  }, 64);
  return out;
}

GrovesMechanism bcgc(const GrovesMechanism& mech) {
  const Rational n(static_cast<long>(mech.agents()));
  if (mech.is_anonymous() && mech.setting().vcg_permutation_independent()) {
    const auto s = anonymous_surplus_table(mech);
    return GrovesMechanism(mech.shared_setting(), tabulate_anonymous(mech.setting(), [&](std::size_t rank) {
                             return mech.anonymous_values()[rank] + s[rank] / n;
                           }));
  }
  const auto s = surplus_table(mech);
  return GrovesMechanism(mech.shared_setting(), tabulate(mech.setting(), [&](std::size_t a, std::size_t o) {
                           return mech.r(a, o) + s[a][o] / n;
                         }));
}

GrovesMechanism bcgc_j(const GrovesMechanism& mech, std::size_t agent) {
  require_agent(mech, agent);
  TabulatedRedistribution out = mech.tabulated();
  const std::size_t count = mech.keys().others_count();
  std::vector<Rational> s(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t o = begin; o < end; ++o) s[o] = grid_surplus(mech, agent, o);
  }, 64);
  for (std::size_t o = 0; o < count; ++o) out.tables[agent][o] += s[o];
  return GrovesMechanism(mech.shared_setting(), std::move(out));
}

PriorityOrder PriorityOrder::from_priorities(std::vector<std::size_t> priorities) {
  const std::size_t n = priorities.size();
  std::vector<std::size_t> sequence(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t p = priorities[a];
    if (p < 1 || p > n || sequence[p - 1] != n) {
      throw ContractViolation("priorities must be a permutation of 1.." + std::to_string(n));
    }
    sequence[p - 1] = a;
  }
  PriorityOrder out;
  out.priorities_ = std::move(priorities);
  out.sequence_ = std::move(sequence);
  return out;
}

PriorityOrder PriorityOrder::from_sequence(std::vector<std::size_t> agents) {
  const std::size_t n = agents.size();
  std::vector<std::size_t> priorities(n, 0);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t a = agents[rank];
    if (a >= n || priorities[a] != 0) {
      throw ContractViolation("priority sequence must list each of the " + std::to_string(n) +
                              " agents once");
    }
    priorities[a] = rank + 1;
  }
  PriorityOrder out;
  out.priorities_ = std::move(priorities);
  out.sequence_ = std::move(agents);
  return out;
}

PriorityOrder PriorityOrder::identity(std::size_t agents) {
  std::vector<std::size_t> seq(agents);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  return from_sequence(std::move(seq));
}

GrovesMechanism priority_improve(const GrovesMechanism& mech, const PriorityOrder& order) {
  if (order.size() != mech.agents()) {
    throw ContractViolation("priority order covers " + std::to_string(order.size()) + " agents, expected " +
                            std::to_string(mech.agents()));
  }
  require_non_deficit(mech);
  TabulatedRedistribution current = mech.tabulated();
  const std::size_t count = mech.keys().others_count();
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t agent = order.agent_at(rank);
    std::vector<Rational> next(count);
    parallel_for(count, [&](std::size_t begin, std::size_t end) {
      for (std::size_t o = begin; o < end; ++o) next[o] = others_constrained_min(mech, &current, agent, o);
    }, 64);
    current.tables[agent] = std::move(next);
  }
  return GrovesMechanism(mech.shared_setting(), std::move(current));
}

GrovesMechanism iterate_step(const GrovesMechanism& mech) {
  require_symmetric(mech, "iterate_step");
  const KeySpace& keys = mech.keys();
  const Rational n(static_cast<long>(mech.agents()));
  const Rational keep = (n - 1) / n;
  std::vector<Rational> next(keys.multiset_count());
  parallel_for(next.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t rank = begin; rank < end; ++rank) {
      const Rational inf = others_constrained_min(mech, nullptr, 0, keys.multiset_code(rank));
      next[rank] = keep * mech.anonymous_values()[rank] + inf / n;
    }
  }, 64);
  return GrovesMechanism(mech.shared_setting(), AnonymousRedistribution{std::move(next)});
}

Rational iteration_residual(const GrovesMechanism& mech) {
  require_symmetric(mech, "iteration_residual");
  const KeySpace& keys = mech.keys();
  Rational worst;
  for (std::size_t rank = 0; rank < keys.multiset_count(); ++rank) {
    const std::size_t o = keys.multiset_code(rank);
    Rational slack = others_constrained_min(mech, nullptr, 0, o) - mech.anonymous_values()[rank];
    if (rank == 0 || slack > worst) worst = std::move(slack);
  }
  return worst;
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::fixed_point:
      return "fixed_point";
    case StopReason::residual_bound:
      return "residual_bound";
    case StopReason::step_cap:
      return "step_cap";
  }
  return "unknown";
}

IterationResult iterate_until(const GrovesMechanism& mech, std::size_t max_steps,
                              const Rational& residual_bound) {
  require_anonymous(mech, "iterate_until");
  require_non_deficit(mech);
  IterationTrace trace;
  GrovesMechanism current = mech;
  for (std::size_t step = 0;; ++step) {
    Rational residual = iteration_residual(current);
    trace.steps.push_back(IterationStep{step, current, residual});
    if (residual.is_zero()) {
      trace.reason = StopReason::fixed_point;
      break;
    }
    if (residual <= residual_bound) {
      trace.reason = StopReason::residual_bound;
      break;
    }
    if (step == max_steps) {
      trace.reason = StopReason::step_cap;
      break;
    }
    current = iterate_step(current);
  }
  return IterationResult{std::move(current), std::move(trace)};
}

GrovesMechanism anonymize(const GrovesMechanism& mech) {
  if (!mech.setting().vcg_permutation_independent()) {
    throw ContractViolation("anonymize needs a total VCG payment that is permutation independent; " +
                            mech.domain().describe() + " does not qualify");
  }
  const KeySpace& keys = mech.keys();
  const std::size_t n = mech.agents();
  const Rational denom(factorial(n));
  std::vector<Rational> out(keys.multiset_count());
  parallel_for(out.size(), [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> perm(n - 1);
    std::vector<std::size_t> permuted(n - 1);
    for (std::size_t rank = begin; rank < end; ++rank) {
      const auto base = keys.others_indices(keys.multiset_code(rank));
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      Rational sum;
      do {
        for (std::size_t k = 0; k + 1 < n; ++k) permuted[k] = base[perm[k]];
        const std::size_t code = keys.encode_others(permuted);
        for (std::size_t a = 0; a < n; ++a) sum += mech.r(a, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      out[rank] = sum / denom;
    }
  }, 16);
  return GrovesMechanism(mech.shared_setting(), AnonymousRedistribution{std::move(out)});
}

AnonymousRedistribution anchored_perturbation(const TypeGrid& grid, std::span<const Rational> anchor) {
  const std::size_t n = grid.agents();
  if (n < 3) throw ContractViolation("anchored perturbation needs at least 3 agents");
  if (anchor.size() != n - 1) {
    throw ContractViolation("anchor needs " + std::to_string(n - 1) + " values");
  }
  const KeySpace keys(n, grid.size());
  std::vector<std::size_t> idx(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto i = grid.index_of(anchor[k]);
    if (!i) throw ContractViolation("anchor value " + anchor[k].to_string() + " is off the grid");
    idx[k] = *i;
  }
  std::vector<std::size_t> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("anchor values must be distinct");
  }
  const std::size_t anchor_rank = keys.multiset_rank(keys.encode_others(idx));
  AnonymousRedistribution out;
  out.table.assign(keys.multiset_count(), Rational(2));
  out.table[anchor_rank] = Rational(-1);
  return out;
}

}  // namespace groves
