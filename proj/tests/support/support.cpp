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


#include "support.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace groves::testing {

Rational random_small_rational(Rng& rng) {
  static const long kDen[] = {1, 2, 3, 4, 6};
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<std::size_t> den(0, 4);
  return Rational(num(rng), kDen[den(rng)]);
}

namespace {

Rational min_total(const GrovesMechanism& m) {
  Rational lo = m.total_payment_at(0);
  for (std::size_t p = 1; p < m.keys().profile_count(); ++p) lo = std::min(lo, m.total_payment_at(p));
  return lo;
}

}  // namespace

TabulatedRedistribution random_non_deficit_tabulated(const Setting& setting, Rng& rng) {
  const auto shared = std::make_shared<const Setting>(setting);
  TabulatedRedistribution t =
      tabulate(setting, [&](std::size_t, std::size_t) { return random_small_rational(rng); });
  const GrovesMechanism raw(shared, t);
  const Rational shift = min_total(raw) / Rational(static_cast<long>(setting.agents()));
  for (auto& table : t.tables) {
    for (auto& x : table) x += shift;
  }
  return t;
}

AnonymousRedistribution random_non_deficit_anonymous(const Setting& setting, Rng& rng) {
  const auto shared = std::make_shared<const Setting>(setting);
  AnonymousRedistribution t = tabulate_anonymous(setting, [&](std::size_t) { return random_small_rational(rng); });
  const GrovesMechanism raw(shared, t);
  const Rational shift = min_total(raw) / Rational(static_cast<long>(setting.agents()));
  for (auto& x : t.table) x += shift;
  return t;
}

namespace {

// Welfare of the agents other than `skip` (none if skip == n) for a winner set.
Rational others_auction_welfare(std::span<const Rational> profile, const std::vector<std::size_t>& winners,
                                std::size_t skip) {
  Rational w;
  for (std::size_t j : winners) {
    if (j != skip) w += profile[j];
  }
  return w;
}

void subsets(std::size_t n, std::size_t m, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = start; j < n; ++j) {
    cur.push_back(j);
    subsets(n, m, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Rational brute_vcg_payment(const Domain& domain, std::span<const Rational> profile, std::size_t agent) {
  const std::size_t n = profile.size();
  if (domain.is_auction()) {
    const std::size_t m = domain.units();
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur;
    subsets(n, m, 0, cur, all);
    // Efficient set: maximal welfare, lexicographically smallest on ties
    // (subsets are generated in lexicographic order).
    std::size_t best = 0;
    for (std::size_t s = 1; s < all.size(); ++s) {
      if (others_auction_welfare(profile, all[s], n) > others_auction_welfare(profile, all[best], n)) best = s;
    }
    Rational without;
    for (const auto& s : all) without = std::max(without, others_auction_welfare(profile, s, agent));
    return without - others_auction_welfare(profile, all[best], agent);
  }
  Rational others_build;
  Rational total_build;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational v = profile[j] - domain.share(j, n);
    total_build += v;
    if (j != agent) others_build += v;
  }
  const bool build = total_build.sign() >= 0;
  const Rational best_for_others = std::max(Rational(0), others_build);
  return best_for_others - (build ? others_build : Rational(0));
}

Rational brute_total_vcg(const Domain& domain, std::span<const Rational> profile) {
  Rational t;
  for (std::size_t a = 0; a < profile.size(); ++a) t += brute_vcg_payment(domain, profile, a);
  return t;
}

Rational brute_surplus(const GrovesMechanism& mech, std::size_t agent, std::span<const Rational> others) {
  std::optional<Rational> best;
  std::vector<Rational> profile(mech.agents());
  for (const auto& x : mech.grid().values()) {
    for (std::size_t j = 0, k = 0; j < mech.agents(); ++j) profile[j] = j == agent ? x : others[k++];
    Rational t = brute_total_vcg(mech.domain(), profile);
    for (std::size_t j = 0; j < mech.agents(); ++j) {
      std::vector<Rational> rest;
      for (std::size_t a = 0; a < mech.agents(); ++a) {
        if (a != j) rest.push_back(profile[a]);
      }
      t -= redistribute(mech, j, rest);
    }
    if (!best || t < *best) best = t;
  }
  return *best;
}

std::vector<std::vector<Rational>> all_vectors(const TypeGrid& grid, std::size_t length) {
  std::vector<std::vector<Rational>> out{{}};
  for (std::size_t pos = 0; pos < length; ++pos) {
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : out) {
      for (const auto& v : grid.values()) {
        auto ext = prefix;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

// Solves A x = b exactly; throws if singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::runtime_error("singular OEL system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[row][c] -= f * a[col][c];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = b[j] / a[j][j];
  return x;
}

}  // namespace

LinearRedistribution oel_by_elimination(const OELSpec& spec) {
  // For sorted theta_1 >= ... >= theta_n the total payment of a linear
  // anonymous mechanism is P_0 + sum_t P_t theta_t with
  //   P_0 = -n a_0,  P_t = m [t = m+1] - (t-1) a_{t-1} - (n-t) a_t,
  // where a_j (1 <= j <= n-1) are the order-statistic coefficients and the
  // out-of-range a_0 (as an order-statistic term) and a_n are zero. The
  // unknowns are a_0..a_{n-1}; each row below is one P expressed in them.
  const std::size_t n = spec.agents;
  const std::size_t m = spec.units;
  const std::size_t k = spec.index;
  const Rational N(static_cast<long>(n));
  auto p_row = [&](std::size_t t, std::vector<Rational>& row, Rational& rhs) {
    row.assign(n, Rational(0));
    rhs = Rational(0);
    if (t == 0) {
      row[0] = -N;
      return;
    }
    if (t >= 2) row[t - 1] -= Rational(static_cast<long>(t - 1));
    if (t <= n - 1) row[t] -= Rational(static_cast<long>(n - t));
    if (t == m + 1) rhs = -Rational(static_cast<long>(m));  // move m to the right side
  };
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> row;
  Rational rhs;
  auto push = [&](std::vector<Rational> r, Rational v) {
    a.push_back(std::move(r));
    b.push_back(std::move(v));
  };
  if (k == 0) {
    for (std::size_t t = 2; t <= n; ++t) {
      p_row(t, row, rhs);
      push(row, rhs);
    }
    std::vector<Rational> r0, r1;
    Rational v0, v1;
    p_row(0, r0, v0);
    p_row(1, r1, v1);
    for (std::size_t j = 0; j < n; ++j) r0[j] += spec.upper * r1[j];
    push(r0, v0 + spec.upper * v1);
  } else if (k == n) {
    for (std::size_t t = 1; t <= n - 1; ++t) {
      p_row(t, row, rhs);
      push(row, rhs);
    }
    std::vector<Rational> r0, rn;
    Rational v0, vn;
    p_row(0, r0, v0);
    p_row(n, rn, vn);
    for (std::size_t j = 0; j < n; ++j) r0[j] += spec.lower * rn[j];
    push(r0, v0 + spec.lower * vn);
  } else {
    for (std::size_t t = 0; t <= n; ++t) {
      if (t == k || t == k + 1) continue;
      p_row(t, row, rhs);
      push(row, rhs);
    }
    std::vector<Rational> rk, rk1;
    Rational vk, vk1;
    p_row(k, rk, vk);
    p_row(k + 1, rk1, vk1);
    for (std::size_t j = 0; j < n; ++j) rk[j] += rk1[j];
    push(rk, vk + vk1);
  }
  const auto x = solve(std::move(a), std::move(b));
  LinearRedistribution out;
  out.constant = x[0];
  out.coefficients.assign(x.begin() + 1, x.end());
  return out;
}

std::vector<OelIndex> oel_indices(std::size_t max_n) {
  std::vector<OelIndex> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t k = 0; k <= n; ++k) {
        if ((k + m) % 2 == 1) out.push_back({n, m, k});
      }
    }
  }
  return out;
}

}  // namespace groves::testing
