// Copyright 2026 The mms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fixtures, random small instances and a brute-force oracle shared by the
// test binaries. Nothing here calls into the solver or the branch-and-bound
// search, so it can be used to check them.

#ifndef MMS_TESTS_TEST_SUPPORT_HPP
#define MMS_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mms/generator.hpp"
#include "mms/instance.hpp"

namespace mms::testing {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return {num, den}; }

inline std::vector<Rational> row(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> out;
  for (const auto v : values) out.emplace_back(v);
  return out;
}

/// Two agents, one category {0,1,2,3} with k = 2, both valuing (10,8,6,4).
inline Instance fix_a(std::size_t k = 2) {
  return Instance({row({10, 8, 6, 4}), row({10, 8, 6, 4})}, {{{0, 1, 2, 3}, k}});
}

/// Two agents, categories {0,1} and {2,3} with k = 1, unordered values.
inline Instance fix_b() {
  return Instance({row({5, 7, 3, 1}), row({6, 2, 4, 8})}, {{{0, 1}, 1}, {{2, 3}, 1}});
}

/// Normalized, ordered: one category of five items, k = 3.
inline Instance fix_c() {
  const std::vector<Rational> v{q(9, 20), q(9, 20), q(9, 20), q(9, 20), q(1, 5)};
  return Instance({v, v}, {{{0, 1, 2, 3, 4}, 3}});
}

/// Normalized, ordered: one category of eight items, k = 4.
inline Instance fix_d() {
  const std::vector<Rational> v{q(2, 5), q(2, 5), q(2, 5), q(2, 5), q(1, 5), q(1, 10), q(1, 20), q(1, 20)};
  return Instance({v, v}, {{{0, 1, 2, 3, 4, 5, 6, 7}, 4}});
}

/// Three agents, thirteen items in four categories (k = 2, 1, 1, 1). Agent 0
/// has v(M) = 180 and maximin share 60 with the partition
/// {0,3,6,9,12}, {1,5,8,11}, {2,4,7,10}. The other two agents are arbitrary
/// ordered valuations with the same total.
inline Instance fix_e() {
  return Instance(
      {
          row({36, 34, 23, 22, 13, 9, 1, 12, 9, 1, 12, 8, 0}),
          row({40, 35, 20, 15, 12, 10, 8, 11, 9, 7, 6, 4, 3}),
          row({20, 15, 10, 5, 30, 20, 10, 25, 15, 10, 10, 5, 5}),
      },
      {{{0, 1, 2, 3}, 2}, {{4, 5, 6}, 1}, {{7, 8, 9}, 1}, {{10, 11, 12}, 1}});
}

struct SmallParams {
  std::size_t n_min = 2;
  std::size_t n_max = 3;
  std::size_t m_min = 1;
  std::size_t m_max = 8;
  std::int64_t value_max = 20;
  bool allow_zero = true;
};

/// Random valid instance: random categories, thresholds from
/// ceil(|C|/n) up to |C|, values uniform in [0 or 1, value_max].
inline Instance random_small(std::mt19937_64& rng, const SmallParams& p = {}) {
  const std::size_t n = uniform_int(rng, p.n_min, p.n_max);
  const std::size_t m = uniform_int(rng, p.m_min, p.m_max);
  const std::size_t ell = uniform_int(rng, 1, std::max<std::size_t>(1, std::min<std::size_t>(m, 4)));
  std::vector<Category> cats(ell);
  for (ItemId j = 0; j < m; ++j) cats[uniform_int(rng, 0, ell - 1)].items.push_back(j);
  for (auto& c : cats) {
    if (c.items.empty()) continue;
    const std::size_t lo = (c.items.size() + n - 1) / n;
    c.k = uniform_int(rng, lo, std::max(lo, c.items.size()));
  }
  std::vector<Rational> values;
  for (std::size_t t = 0; t < n * m; ++t) {
    values.emplace_back(static_cast<std::int64_t>(uniform_int(rng, p.allow_zero ? 0 : 1, p.value_max)));
  }
  return {n, m, std::move(values), std::move(cats)};
}

/// Calls `visit` with every feasible allocation (n^m assignments filtered).
inline void for_each_feasible(const Instance& inst, const std::function<void(const Allocation&)>& visit) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  std::vector<std::size_t> owner(m, 0);
  for (;;) {
    Allocation a;
    a.bundles.resize(n);
    for (ItemId j = 0; j < m; ++j) a.bundles[owner[j]].push_back(j);
    if (std::all_of(a.bundles.begin(), a.bundles.end(),
                    [&](const Bundle& b) { return is_feasible_bundle(inst, b); })) {
      visit(a);
    }
    std::size_t pos = 0;
    while (pos < m && ++owner[pos] == n) owner[pos++] = 0;
    if (pos == m) break;
  }
}

/// Maximin share by exhaustive enumeration, no pruning.
inline Rational naive_mms(const Instance& inst, AgentId agent) {
  Rational best(-1);
  for_each_feasible(inst, [&](const Allocation& a) {
    Rational low;
    bool first = true;
    for (const Bundle& b : a.bundles) {
      const Rational v = bundle_value(inst, agent, b);
      if (first || v < low) low = v;
      first = false;
    }
    if (low > best) best = low;
  });
  return best;
}

}  // namespace mms::testing

#endif  // MMS_TESTS_TEST_SUPPORT_HPP
