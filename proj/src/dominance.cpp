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


#include "groves/dominance.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "groves/errors.hpp"
#include "groves/parallel.hpp"

namespace groves {

namespace {

void require_same_setting(const GrovesMechanism& a, const GrovesMechanism& b) {
  if (!(a.setting() == b.setting())) {
    throw ContractViolation("mechanisms are defined over different settings: " + a.domain().describe() +
                            " vs " + b.domain().describe());
  }
}

Comparison classify(std::size_t strict, std::size_t violations) {
  if (strict > 0 && violations > 0) return Comparison::incomparable;
  if (strict > 0) return Comparison::dominates;
  if (violations > 0) return Comparison::dominated_by;
  return Comparison::equal;
}

void record(DominanceVerdict& v, std::size_t limit, std::vector<Rational> point, std::optional<std::size_t> agent,
            const Rational& first, const Rational& second) {
  const int c = first < second ? -1 : (second < first ? 1 : 0);
  if (c == 0) return;
  auto& list = c > 0 ? v.strict_witnesses : v.violation_witnesses;
  auto& count = c > 0 ? v.strict_count : v.violation_count;
  ++count;
  if (list.size() < limit) list.push_back(DominanceWitness{std::move(point), agent, first, second});
}

Rational slack_at(const GrovesMechanism& mech, std::size_t agent, std::size_t others) {
  const KeySpace& keys = mech.keys();
  Rational best;
  for (std::size_t x = 0; x < keys.grid_size(); ++x) {
    const std::size_t p = keys.insert(others, agent, x);
    Rational v = mech.setting().total_vcg(p);
    for (std::size_t j = 0; j < mech.agents(); ++j) {
      if (j != agent) v -= mech.r(j, keys.remove(p, j));
    }
    if (x == 0 || v < best) best = std::move(v);
  }
  return best - mech.r(agent, others);
}

}  // namespace

std::string_view to_string(Relation relation) {
  return relation == Relation::individual ? "individual" : "collective";
}

std::string_view to_string(Comparison comparison) {
  switch (comparison) {
    case Comparison::dominates:
      return "dominates";
    case Comparison::dominated_by:
      return "dominated_by";
    case Comparison::equal:
      return "equal";
    case Comparison::incomparable:
      return "incomparable";
  }
  return "unknown";
}

DominanceVerdict compare_individual(const GrovesMechanism& a, const GrovesMechanism& b,
                                    std::size_t witness_limit) {
  require_same_setting(a, b);
  DominanceVerdict v;
  v.relation = Relation::individual;
  const KeySpace& keys = a.keys();
  for (std::size_t agent = 0; agent < a.agents(); ++agent) {
    for (std::size_t o = 0; o < keys.others_count(); ++o) {
      const Rational& x = a.r(agent, o);
      const Rational& y = b.r(agent, o);
      if (x != y) record(v, witness_limit, a.setting().others_values(o), agent, x, y);
    }
  }
  v.result = classify(v.strict_count, v.violation_count);
  return v;
}

DominanceVerdict compare_collective(const GrovesMechanism& a, const GrovesMechanism& b,
                                    std::size_t witness_limit) {
  require_same_setting(a, b);
  const std::size_t count = a.keys().profile_count();
  std::vector<Rational> sa(count);
  std::vector<Rational> sb(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      sa[p] = a.redistribution_total(p);
      sb[p] = b.redistribution_total(p);
    }
  });
  DominanceVerdict v;
  v.relation = Relation::collective;
  for (std::size_t p = 0; p < count; ++p) {
    if (sa[p] != sb[p]) record(v, witness_limit, a.setting().profile_values(p), std::nullopt, sa[p], sb[p]);
  }
  v.result = classify(v.strict_count, v.violation_count);
  return v;
}

Rational feasibility_slack(const GrovesMechanism& mech, std::size_t agent, std::span<const Rational> others) {
  if (agent >= mech.agents()) throw ContractViolation("agent index out of range");
  return slack_at(mech, agent, mech.setting().others_code(others));
}

std::vector<std::vector<Rational>> slack_table(const GrovesMechanism& mech) {
  const std::size_t count = mech.keys().others_count();
  std::vector<std::vector<Rational>> out(mech.agents(), std::vector<Rational>(count));
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t o = begin; o < end; ++o) {
      for (std::size_t a = 0; a < mech.agents(); ++a) out[a][o] = slack_at(mech, a, o);
    }
  }, 64);
  return out;
}

Verdict is_individually_undominated(const GrovesMechanism& mech) {
  const auto table = slack_table(mech);
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t o = 0; o < table[a].size(); ++o) {
      if (!table[a][o].is_zero()) {
        return Verdict{false, Witness{mech.setting().others_values(o), a, std::nullopt, table[a][o]}};
      }
    }
  }
  return {};
}

TwoAgentAudit two_agent_vcg_audit(const TypeGrid& grid, const Rational& cost,
                                  std::span<const AnonymousRedistribution> candidates) {
  if (grid.agents() != 2) throw ContractViolation("two-agent audit needs a two-agent grid");
  const auto setting = Setting::make(Domain::public_project_equal(cost), grid);
  const GrovesMechanism vcg = GrovesMechanism::vcg(setting);
  const KeySpace& keys = setting->keys();
  TwoAgentAudit audit;
  audit.vcg_undominated = static_cast<bool>(is_individually_undominated(vcg));
  audit.holds = audit.vcg_undominated;
  for (const auto& table : candidates) {
    const GrovesMechanism cand(setting, table);
    TwoAgentCandidate report;
    const Verdict nd = is_non_deficit(cand);
    report.non_deficit = nd.holds;
    report.deficit_witness = nd.witness;
    report.nonpositive = std::all_of(table.table.begin(), table.table.end(),
                                     [](const Rational& x) { return x.sign() <= 0; });
    report.is_vcg = std::all_of(table.table.begin(), table.table.end(),
                                [](const Rational& x) { return x.is_zero(); });
    if (report.non_deficit) {
      report.vcg_relation = compare_individual(vcg, cand, 1).result;
      report.consistent = report.nonpositive &&
                          (report.is_vcg || *report.vcg_relation == Comparison::dominates);
    } else {
      for (std::size_t x = 0; x < grid.size() && !report.consistent; ++x) {
        const Rational& rx = table.table[keys.multiset_rank(x)];
        const std::size_t diag = keys.insert(x, 0, x);
        report.consistent = rx.sign() > 0 && cand.total_payment_at(diag) == Rational(-2) * rx;
      }
    }
    audit.holds = audit.holds && report.consistent;
    audit.candidates.push_back(std::move(report));
  }
  return audit;
}

PurnVerdict purn_condition(const GrovesMechanism& mech) {
  const KeySpace& keys = mech.keys();
  const std::size_t g = keys.grid_size();
  PurnVerdict out;
  for (std::size_t a = 0; a < mech.agents(); ++a) {
    PurnAgentReport report;
    report.agent = a;
    std::vector<bool> universal(g, true);
    for (std::size_t o = 0; o < keys.others_count(); ++o) {
      bool found = false;
      for (std::size_t b = 0; b < g; ++b) {
        const std::size_t p = keys.insert(o, a, b);
        const bool zero = (mech.setting().vcg_payment(p, a) - mech.r(a, o)).is_zero();
        found = found || zero;
        if (!zero) universal[b] = false;
      }
      if (!found && report.holds) {
        report.holds = false;
        report.failing_others = mech.setting().others_values(o);
      }
    }
    for (std::size_t b = 0; b < g; ++b) {
      if (universal[b]) report.universal_reports.push_back(mech.grid().value(b));
    }
    out.holds = out.holds && report.holds;
    out.agents.push_back(std::move(report));
  }
  return out;
}

SearchReport search_collective_dominator(const GrovesMechanism& base, const SearchOptions& options) {
  if (!base.is_anonymous()) throw ContractViolation("search needs an anonymous base mechanism");
  const Verdict nd = is_non_deficit(base);
  if (!nd) throw DeficitError(nd.witness->profile, nd.witness->value);

  const KeySpace& keys = base.keys();
  const std::size_t n = base.agents();
  const std::size_t ranks = keys.multiset_count();
  const std::size_t profiles = keys.profile_count();
  std::vector<Rational> totals(profiles);
  std::vector<std::uint32_t> profile_ranks(profiles * n);
  for (std::size_t p = 0; p < profiles; ++p) {
    totals[p] = base.total_payment_at(p);
    for (std::size_t a = 0; a < n; ++a) {
      profile_ranks[p * n + a] = static_cast<std::uint32_t>(keys.multiset_rank(keys.remove(p, a)));
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_rank(0, ranks - 1);
  std::uniform_int_distribution<std::size_t> pick_support(1, std::max<std::size_t>(1, std::min(options.max_support, ranks)));
  std::uniform_int_distribution<int> mixed_value(-2, 3);
  std::uniform_int_distribution<int> positive_value(1, 3);
  std::bernoulli_distribution bump(0.5);

  SearchReport report;
  std::vector<long> d(ranks);
  for (std::size_t c = 0; c < options.budget; ++c) {
    ++report.candidates;
    std::fill(d.begin(), d.end(), 0L);
    const bool positive = bump(rng);
    const std::size_t support = pick_support(rng);
    for (std::size_t s = 0; s < support; ++s) {
      int v = positive ? positive_value(rng) : mixed_value(rng);
      if (v == 0) v = 1;
      d[pick_rank(rng)] = v;
    }

    bool nonnegative = true;
    bool any_positive = false;
    std::optional<Rational> step;
    for (std::size_t p = 0; p < profiles && nonnegative; ++p) {
      long sum = 0;
      for (std::size_t a = 0; a < n; ++a) sum += d[profile_ranks[p * n + a]];
      if (sum < 0) nonnegative = false;
      if (sum > 0) {
        any_positive = true;
        Rational ratio = totals[p] / Rational(sum);
        if (!step || ratio < *step) step = std::move(ratio);
      }
    }
    if (!nonnegative || !any_positive) continue;
    ++report.improving_directions;
    if (step->sign() <= 0) continue;

    std::vector<Rational> table = base.anonymous_values();
    for (std::size_t k = 0; k < ranks; ++k) {
      if (d[k] != 0) table[k] += *step * Rational(d[k]);
    }
    GrovesMechanism candidate(base.shared_setting(), AnonymousRedistribution{std::move(table)});
    if (is_non_deficit(candidate) &&
        compare_collective(candidate, base, 1).result == Comparison::dominates) {
      ++report.dominators;
      if (!report.first_dominator) report.first_dominator = std::move(candidate);
    }
  }
  return report;
}

}  // namespace groves
