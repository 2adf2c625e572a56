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

#ifndef MMS_ORDERED_HPP
#define MMS_ORDERED_HPP

#include <vector>

#include "mms/instance.hpp"

namespace mms {

/// An instance in which every agent ranks each category's slots the same way.
///
/// `instance` keeps the origin's item ids and categories; only the values are
/// rearranged so that inside a category, slot 0 is everyone's most valuable
/// position. `slot_map[h][j]` is the original item id sitting at slot j of
/// category h.
struct OrderedInstance {
  Instance instance;
  Instance origin;
  std::vector<std::vector<ItemId>> slot_map;
};

/// Sorts each agent's values inside every category into non-increasing slot order.
OrderedInstance to_ordered(const Instance& inst);

/// Maps an allocation of the ordered instance back onto the origin.
///
/// Categories are processed in order. Walking the slots of a category from
/// the top, the agent holding that slot takes her most valuable unclaimed
/// original item of the category (lowest id on ties). No agent ends up worse
/// off than in `alloc_ordered`, and feasibility is preserved. Throws
/// std::invalid_argument when `alloc_ordered` is malformed or infeasible.
Allocation recover(const OrderedInstance& ordered, const Allocation& alloc_ordered);

bool is_ordered(const Instance& inst);

}  // namespace mms

#endif  // MMS_ORDERED_HPP
