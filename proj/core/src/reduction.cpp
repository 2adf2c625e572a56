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

#include <algorithm>

namespace mms {
namespace {

// Appends the `count` deepest slots of `c`, skipping `skip`.
void take_deepest(const Category& c, std::size_t count, std::optional<ItemId> skip, Bundle& out) {
  for (auto it = c.items.rbegin(); it != c.items.rend() && count > 0; ++it) {
    if (skip && *it == *skip) continue;
    out.push_back(*it);
    --count;
  }
}

std::size_t surplus(std::size_t size, std::size_t n, std::size_t k) {
  const std::size_t room = (n - 1) * k;
  return size > room ? size - room : 0;
}

}  // namespace

std::optional<std::pair<AgentId, ItemId>> find_high_item(const Instance& inst, const Rational& alpha) {
  for (AgentId i = 0; i < inst.agents(); ++i) {
    for (ItemId j = 0; j < inst.items(); ++j) {
      if (inst.value(i, j) >= alpha) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

Bundle reduction_bundle(const Instance& inst, ItemId item) {
  if (item >= inst.items()) throw std::out_of_range("unknown item " + std::to_string(item));
  const std::size_t n = inst.agents();
  Bundle out{item};
  const std::size_t home = inst.category_of(item);
  for (std::size_t h = 0; h < inst.categories().size(); ++h) {
    const Category& c = inst.categories()[h];
    const std::size_t size = c.items.size() - (h == home ? 1 : 0);
    take_deepest(c, surplus(size, n, c.k), item, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Bundle minimal_bundle(const Instance& inst) {
  Bundle out;
  for (const Category& c : inst.categories()) {
    take_deepest(c, surplus(c.items.size(), inst.agents(), c.k), std::nullopt, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Reduction apply_reduction(const Instance& inst, AgentId agent, std::span<const ItemId> bundle,
                          std::optional<ItemId> anchor) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  if (agent >= n) throw std::invalid_argument("unknown agent " + std::to_string(agent));
  std::vector<bool> removed(m, false);
  for (const ItemId item : bundle) {
    if (item >= m) throw std::invalid_argument("unknown item " + std::to_string(item));
    removed[item] = true;
  }
  if (anchor && (*anchor >= m || !removed[*anchor])) {
    throw std::invalid_argument("reduction bundle does not contain its anchor");
  }
  if (!is_feasible_bundle(inst, bundle)) {
    throw std::invalid_argument("reduction bundle exceeds a category threshold");
  }

  Reduction out;
  out.agent = agent;
  out.anchor_item = anchor;
  out.bundle.assign(bundle.begin(), bundle.end());
  std::sort(out.bundle.begin(), out.bundle.end());

  std::vector<ItemId> new_id(m, 0);
  for (ItemId j = 0; j < m; ++j) {
    if (removed[j]) continue;
    new_id[j] = out.item_map.size();
    out.item_map.push_back(j);
  }
  for (AgentId i = 0; i < n; ++i) {
    if (i != agent) out.agent_map.push_back(i);
  }

  std::vector<Category> categories;
  for (std::size_t h = 0; h < inst.categories().size(); ++h) {
    const Category& c = inst.categories()[h];
    Category kept{{}, c.k};
    for (const ItemId item : c.items) {
      if (!removed[item]) kept.items.push_back(new_id[item]);
    }
    if (kept.items.size() > (n - 1) * c.k) {
      throw std::invalid_argument("reduction leaves category " + std::to_string(h) +
                                  " with more items than the remaining agents can take");
    }
    categories.push_back(std::move(kept));
  }

  std::vector<Rational> values;
  values.reserve(out.agent_map.size() * out.item_map.size());
  for (const AgentId i : out.agent_map) {
    for (const ItemId j : out.item_map) values.push_back(inst.value(i, j));
  }
  out.reduced = Instance(out.agent_map.size(), out.item_map.size(), std::move(values),
                         std::move(categories));
  return out;
}

}  // namespace mms
