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

#include "mms/ordered.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mms {
namespace {

using testing::fix_b;
using testing::row;

TEST(Ordered, SortsWithinCategories) {
  const OrderedInstance ord = to_ordered(fix_b());
  EXPECT_TRUE(is_ordered(ord.instance));
  EXPECT_FALSE(is_ordered(fix_b()));
  const std::vector<Rational> v0(ord.instance.row(0).begin(), ord.instance.row(0).end());
  const std::vector<Rational> v1(ord.instance.row(1).begin(), ord.instance.row(1).end());
  EXPECT_EQ(v0, row({7, 5, 3, 1}));
  EXPECT_EQ(v1, row({6, 2, 8, 4}));
  EXPECT_EQ(ord.origin, fix_b());
  EXPECT_EQ(ord.instance.categories(), fix_b().categories());
}

TEST(Ordered, Idempotent) {
  const OrderedInstance once = to_ordered(fix_b());
  EXPECT_EQ(to_ordered(once.instance).instance, once.instance);
}

TEST(Recover, WorkedExample) {
  const OrderedInstance ord = to_ordered(fix_b());
  const Allocation a = recover(ord, {{{0, 3}, {1, 2}}});
  EXPECT_EQ(a, (Allocation{{{1, 2}, {0, 3}}}));
  EXPECT_EQ(bundle_value(fix_b(), 0, a.bundles[0]), Rational(10));
  EXPECT_EQ(bundle_value(fix_b(), 1, a.bundles[1]), Rational(14));
}

TEST(Recover, RejectsInfeasible) {
  const OrderedInstance ord = to_ordered(fix_b());
  EXPECT_THROW(recover(ord, {{{0, 1}, {2, 3}}}), std::invalid_argument);
  EXPECT_THROW(recover(ord, {{{0, 2}}}), std::invalid_argument);
}

// Every feasible ordered allocation recovers to a feasible allocation in
// which nobody is worse off; the maximin share is unchanged by ordering.
TEST(Recover, PropertyOnRandomInstances) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testing::random_small(rng, {.m_max = 6});
    const OrderedInstance ord = to_ordered(inst);
    ASSERT_TRUE(is_ordered(ord.instance));
    std::size_t checked = 0;
    testing::for_each_feasible(ord.instance, [&](const Allocation& a) {
      if (++checked > 40) return;
      const Allocation back = recover(ord, a);
      ASSERT_TRUE(is_feasible(inst, back));
      for (AgentId i = 0; i < inst.agents(); ++i) {
        EXPECT_GE(bundle_value(inst, i, back.bundles[i]), bundle_value(ord.instance, i, a.bundles[i]));
      }
    });
    for (AgentId i = 0; i < inst.agents(); ++i) {
      EXPECT_EQ(testing::naive_mms(inst, i), testing::naive_mms(ord.instance, i));
    }
  }
}

}  // namespace
}  // namespace mms
