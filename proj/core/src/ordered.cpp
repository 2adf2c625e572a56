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

#include <algorithm>
#include <functional>

namespace mms {

OrderedInstance to_ordered(const Instance& inst) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  std::vector<Rational> values(n * m);
  std::vector<Rational> scratch;
  for (const Category& c : inst.categories()) {
    for (AgentId i = 0; i < n; ++i) {
      scratch.clear();
      for (const ItemId item : c.items) scratch.push_back(inst.value(i, item));
      std::stable_sort(scratch.begin(), scratch.end(), std::greater<>());
      for (std::size_t j = 0; j < c.items.size(); ++j) values[i * m + c.items[j]] = scratch[j];
    }
  }
  OrderedInstance out{Instance(n, m, std::move(values), inst.categories()), inst, {}};
  out.slot_map.reserve(inst.categories().size());
  for (const Category& c : inst.categories()) out.slot_map.push_back(c.items);
  return out;
}

Allocation recover(const OrderedInstance& ordered, const Allocation& alloc_ordered) {
  const Instance& origin = ordered.origin;
  if (!is_feasible(ordered.instance, alloc_ordered)) {
    throw std::invalid_argument("ordered allocation violates a category threshold");
  }
  std::vector<AgentId> owner(origin.items());
  for (AgentId i = 0; i < alloc_ordered.bundles.size(); ++i) {
    for (const ItemId slot : alloc_ordered.bundles[i]) owner[slot] = i;
  }

  Allocation out;
  out.bundles.resize(origin.agents());
  std::vector<bool> claimed(origin.items(), false);
  for (const auto& slots : ordered.slot_map) {
    for (const ItemId slot : slots) {
      const AgentId agent = owner[slot];
      ItemId best = slots.front();
      bool found = false;
      // slots lists the category's original items; pick the best unclaimed one.
      for (const ItemId item : slots) {
        if (claimed[item]) continue;
        if (!found || origin.value(agent, item) > origin.value(agent, best) ||
            (origin.value(agent, item) == origin.value(agent, best) && item < best)) {
          best = item;
          found = true;
        }
      }
      claimed[best] = true;
      out.bundles[agent].push_back(best);
    }
  }
  for (auto& bundle : out.bundles) std::sort(bundle.begin(), bundle.end());
  return out;
}

bool is_ordered(const Instance& inst) {
  for (const Category& c : inst.categories()) {
    for (AgentId i = 0; i < inst.agents(); ++i) {
      for (std::size_t j = 1; j < c.items.size(); ++j) {
        if (inst.value(i, c.items[j - 1]) < inst.value(i, c.items[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace mms
