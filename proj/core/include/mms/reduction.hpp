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

#ifndef MMS_REDUCTION_HPP
#define MMS_REDUCTION_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mms/instance.hpp"

namespace mms {

/// Result of handing `bundle` to `agent` and removing both from the instance.
///
/// `reduced` renumbers the survivors densely and in their original order;
/// `agent_map[a]` and `item_map[j]` give the parent-instance id of reduced
/// agent a and reduced item j.
struct Reduction {
  AgentId agent = 0;
  std::optional<ItemId> anchor_item;
  Bundle bundle;
  Instance reduced;
  std::vector<AgentId> agent_map;
  std::vector<ItemId> item_map;
};

/// The first (agent, item) pair with v_ij >= alpha, scanning agents and then
/// items by increasing index. Meant for normalized ordered instances.
std::optional<std::pair<AgentId, ItemId>> find_high_item(const Instance& inst, const Rational& alpha);

/// `item` plus, from every category, the max(0, |C_h \ {item}| - (n-1)k_h)
/// deepest slots. On an ordered instance those are the least valuable items
/// for every agent. Sorted by id.
Bundle reduction_bundle(const Instance& inst, ItemId item);

/// The least bundle that must leave with one agent so the other n-1 can still
/// be served: the deepest max(0, |C_h| - (n-1)k_h) slots of each category.
Bundle minimal_bundle(const Instance& inst);

/// Removes `agent` and `bundle`. Throws std::invalid_argument when the bundle
/// breaks a threshold, misses the anchor, or would leave some category with
/// more than (n-1)k_h items.
Reduction apply_reduction(const Instance& inst, AgentId agent, std::span<const ItemId> bundle,
                          std::optional<ItemId> anchor = std::nullopt);

}  // namespace mms

#endif  // MMS_REDUCTION_HPP
