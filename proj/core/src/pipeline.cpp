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

#include "mms/pipeline.hpp"

#include <algorithm>
#include <numeric>

#include "mms/ordered.hpp"
#include "mms/reduction.hpp"

namespace mms {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kZeroValue:
      return "zero-value";
    case StepKind::kReduction:
      return "reduction";
    case StepKind::kTail:
      return "tail";
    case StepKind::kBagFill:
      return "bag-fill";
  }
  return "unknown";
}

namespace {

// The shrinking sub-instance the reduction loop works on, in the ordered
// instance's original units, with the ids it had at the top level.
struct Working {
  Instance inst;
  std::vector<AgentId> agent_ids;
  std::vector<ItemId> item_ids;

  [[nodiscard]] Rational unit(AgentId a) const {
    return inst.total_value(a) / Rational(static_cast<std::int64_t>(inst.agents()));
  }

  [[nodiscard]] Bundle to_top(std::span<const ItemId> items) const {
    Bundle out;
    out.reserve(items.size());
    for (const ItemId j : items) out.push_back(item_ids[j]);
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] Bundle everything() const {
    Bundle all(inst.items());
    std::iota(all.begin(), all.end(), ItemId{0});
    return all;
  }

  void shrink(const Reduction& r) {
    std::vector<AgentId> agents;
    agents.reserve(r.agent_map.size());
    for (const AgentId a : r.agent_map) agents.push_back(agent_ids[a]);
    std::vector<ItemId> items;
    items.reserve(r.item_map.size());
    for (const ItemId j : r.item_map) items.push_back(item_ids[j]);
    inst = r.reduced;
    agent_ids = std::move(agents);
    item_ids = std::move(items);
  }
};

}  // namespace

SolveResult solve(const Instance& inst, const Rational& alpha, const SolveOptions& options) {
  require_valid(inst);
  const OrderedInstance ordered = to_ordered(inst);
  const std::size_t n = inst.agents();

  Working work{ordered.instance, std::vector<AgentId>(n), std::vector<ItemId>(inst.items())};
  std::iota(work.agent_ids.begin(), work.agent_ids.end(), AgentId{0});
  std::iota(work.item_ids.begin(), work.item_ids.end(), ItemId{0});

  Solution sol;
  sol.achieved_alpha = alpha;
  sol.unit.assign(n, Rational(0));
  Allocation slots;
  slots.bundles.resize(n);

  auto record = [&](StepKind kind, AgentId local, std::span<const ItemId> items,
                    std::optional<ItemId> anchor) {
    const AgentId agent = work.agent_ids[local];
    SolveStep step{kind, agent, anchor ? std::optional(work.item_ids[*anchor]) : std::nullopt,
                   work.to_top(items), work.unit(local)};
    slots.bundles[agent] = step.slots;
    sol.unit[agent] = step.unit;
    sol.trace.push_back(std::move(step));
  };

  for (;;) {
    const std::size_t n_cur = work.inst.agents();
    if (n_cur == 1) {
      // Normalized, the lone agent holds exactly 1.
      if (!work.inst.total_value(0).is_zero() && Rational(1) < alpha) {
        return SolveFailure{BagFillFailure::kLastAgentShort};
      }
      record(StepKind::kTail, 0, work.everything(), std::nullopt);
      break;
    }

    AgentId zero = n_cur;
    for (AgentId a = 0; a < n_cur; ++a) {
      if (work.inst.total_value(a).is_zero()) {
        zero = a;
        break;
      }
    }
    if (zero < n_cur) {
      const Bundle bundle = minimal_bundle(work.inst);
      const Reduction r = apply_reduction(work.inst, zero, bundle);
      record(StepKind::kZeroValue, zero, bundle, std::nullopt);
      work.shrink(r);
      continue;
    }

    const Instance normalized = normalize(work.inst).first;
    if (const auto high = find_high_item(normalized, alpha)) {
      const auto [agent, item] = *high;
      const Bundle bundle = reduction_bundle(normalized, item);
      const Reduction r = apply_reduction(work.inst, agent, bundle, item);
      record(StepKind::kReduction, agent, bundle, item);
      work.shrink(r);
      continue;
    }

    BagFillOutcome filled = run_bagfill(normalized, alpha, {options.check_invariants});
    sol.invariants += filled.invariants;
    if (!filled.ok()) return SolveFailure{filled.failure};
    for (const BagFillStep& step : filled.steps) {
      record(StepKind::kBagFill, step.agent, step.bundle, std::nullopt);
    }
    break;
  }

  sol.allocation = recover(ordered, slots);
  sol.per_agent_value.reserve(n);
  for (AgentId i = 0; i < n; ++i) {
    sol.per_agent_value.push_back(bundle_value(inst, i, sol.allocation.bundles[i]));
  }
  return sol;
}

bool alpha_feasible(const Instance& inst, const Rational& alpha) { return solve(inst, alpha).ok(); }

BisectResult bisect_alpha(const Instance& inst, const Rational& lo, const Rational& hi,
                          std::size_t iters) {
  if (hi < lo) throw std::invalid_argument("bisection bracket has hi < lo");
  if (!alpha_feasible(inst, lo)) {
    throw std::runtime_error("alpha " + lo.str() + " is infeasible at the bottom of the bracket");
  }
  BisectResult out;
  if (alpha_feasible(inst, hi)) {
    out.best_alpha = hi;
    out.bracket_lo = hi;
    out.bracket_hi = hi;
  } else {
    Rational a = lo;
    Rational b = hi;
    for (std::size_t it = 0; it < iters; ++it) {
      const Rational mid = midpoint(a, b);
      if (alpha_feasible(inst, mid)) {
        a = mid;
      } else {
        b = mid;
      }
      ++out.iterations;
    }
    out.best_alpha = a;
    out.bracket_lo = a;
    out.bracket_hi = b;
  }
  SolveResult again = solve(inst, out.best_alpha);
  if (!again.ok()) throw std::logic_error("best alpha failed to re-solve");
  out.solution = std::move(again.solution());
  return out;
}

}  // namespace mms
