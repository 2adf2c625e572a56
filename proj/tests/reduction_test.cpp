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

#include "mms/reduction.hpp"

#include <random>

#include <gtest/gtest.h>

#include "mms/ordered.hpp"
#include "test_support.hpp"

namespace mms {
namespace {

using testing::fix_a;
using testing::q;

Instance nine_items() {
  std::vector<std::vector<Rational>> v(3);
  for (auto& r : v) {
    for (std::int64_t x = 9; x >= 1; --x) r.emplace_back(x);
  }
  return normalize(Instance(v, {{{0, 1, 2, 3, 4, 5, 6, 7, 8}, 3}})).first;
}

TEST(FindHighItem, PicksLargestWithLowIndexTies) {
  const Instance norm = normalize(fix_a()).first;
  const auto hit = find_high_item(norm, q(1, 2));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->first, 0u);
  EXPECT_EQ(hit->second, 0u);
  EXPECT_FALSE(find_high_item(norm, q(3, 4)).has_value());
}

TEST(FindHighItem, FirstQualifyingPairWins) {
  // Agent 1 holds the largest item, but agent 0 already qualifies.
  const Instance inst({testing::row({1, 1, 0, 0}), testing::row({3, 0, 0, 1})},
                      {{{0, 1}, 1}, {{2, 3}, 1}});
  const auto hit = find_high_item(normalize(inst).first, q(1, 2));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->first, 0u);
  EXPECT_EQ(hit->second, 0u);
  const auto strict = find_high_item(normalize(inst).first, q(3, 2));
  ASSERT_TRUE(strict.has_value());
  EXPECT_EQ(strict->first, 1u);
}

TEST(FindHighItem, NoneWhenAllSmall) {
  const std::vector<Rational> flat(2 * 8, q(1, 4));
  const Instance inst(2, 8, flat, {{{0, 1, 2, 3, 4, 5, 6, 7}, 4}});
  EXPECT_FALSE(find_high_item(inst, q(1, 2)).has_value());
}

TEST(ReductionBundle, PadsWithDeepestSlots) {
  EXPECT_EQ(reduction_bundle(normalize(fix_a()).first, 0), (Bundle{0, 3}));
  EXPECT_EQ(reduction_bundle(nine_items(), 0), (Bundle{0, 7, 8}));
}

TEST(ReductionBundle, CategoriesWithRoomContributeNothing) {
  const Instance inst({testing::row({5, 1, 1, 1}), testing::row({5, 1, 1, 1})},
                      {{{0}, 1}, {{1, 2, 3}, 3}});
  EXPECT_EQ(reduction_bundle(inst, 0), (Bundle{0}));
}

TEST(ApplyReduction, FixA) {
  const Instance norm = normalize(fix_a()).first;
  const Reduction r = apply_reduction(norm, 0, reduction_bundle(norm, 0), 0);
  EXPECT_EQ(r.reduced.agents(), 1u);
  EXPECT_EQ(r.item_map, (std::vector<ItemId>{1, 2}));
  EXPECT_EQ(r.agent_map, (std::vector<AgentId>{1}));
  ASSERT_EQ(r.reduced.categories().size(), 1u);
  EXPECT_EQ(r.reduced.category(0).items.size(), 2u);
  EXPECT_EQ(r.reduced.category(0).k, 2u);
  EXPECT_TRUE(validate_instance(r.reduced).empty());
  EXPECT_EQ(r.reduced.value(0, 0), q(4, 7));
}

TEST(ApplyReduction, NineItems) {
  const Instance inst = nine_items();
  const Reduction r = apply_reduction(inst, 2, reduction_bundle(inst, 0), 0);
  EXPECT_EQ(r.reduced.agents(), 2u);
  EXPECT_EQ(r.reduced.category(0).items.size(), 6u);
  EXPECT_TRUE(validate_instance(r.reduced).empty());
  EXPECT_EQ(r.agent_map, (std::vector<AgentId>{0, 1}));
}

TEST(ApplyReduction, RejectsBadBundles) {
  const Instance norm = normalize(fix_a()).first;
  // Anchor alone leaves 3 items for one agent with k = 2.
  EXPECT_THROW(apply_reduction(norm, 0, Bundle{0}, 0), std::invalid_argument);
  EXPECT_THROW(apply_reduction(norm, 0, Bundle{0, 1, 2}, 0), std::invalid_argument);
  EXPECT_THROW(apply_reduction(norm, 0, Bundle{1, 3}, 0), std::invalid_argument);
  EXPECT_THROW(apply_reduction(norm, 5, Bundle{0, 3}, 0), std::invalid_argument);
}

TEST(MinimalBundle, TakesOnlyTheSurplus) {
  EXPECT_EQ(minimal_bundle(fix_a()), (Bundle{2, 3}));
  EXPECT_EQ(minimal_bundle(testing::fix_b()), (Bundle{1, 3}));
  EXPECT_EQ(minimal_bundle(testing::fix_e()), (Bundle{6, 9, 12}));
}

// On ordered instances, removing an anchor worth alpha with its padding never
// lowers anyone else's maximin share.
TEST(ApplyReduction, MaximinShareMonotone) {
  std::mt19937_64 rng(424242);
  int reduced = 0;
  for (int trial = 0; trial < 300 && reduced < 60; ++trial) {
    const Instance raw = testing::random_small(rng, {.n_min = 3, .n_max = 3, .m_min = 4, .m_max = 7,
                                                     .allow_zero = false});
    const Instance inst = normalize(to_ordered(raw).instance).first;
    const auto hit = find_high_item(inst, q(1, 2));
    if (!hit) continue;
    const Bundle b = reduction_bundle(inst, hit->second);
    EXPECT_GE(bundle_value(inst, hit->first, b), q(1, 2));
    const Reduction r = apply_reduction(inst, hit->first, b, hit->second);
    ASSERT_TRUE(validate_instance(r.reduced).empty());
    for (AgentId i = 0; i < r.reduced.agents(); ++i) {
      EXPECT_GE(testing::naive_mms(r.reduced, i), testing::naive_mms(inst, r.agent_map[i]));
    }
    ++reduced;
  }
  EXPECT_GE(reduced, 30);
}

}  // namespace
}  // namespace mms
