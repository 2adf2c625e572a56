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

#ifndef MMS_PIPELINE_HPP
#define MMS_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mms/bagfill.hpp"
#include "mms/instance.hpp"

namespace mms {

enum class StepKind {
  kZeroValue,  // agent with nothing left to value takes a minimal bundle
  kReduction,  // agent takes an item worth alpha plus padding
  kTail,       // the only agent left in the reduction loop takes everything
  kBagFill,    // bag handed out by bag filling (including the leftover bag)
};

std::string_view to_string(StepKind kind);

/// One agent's exit from the solver, in the order it happened.
struct SolveStep {
  StepKind kind = StepKind::kBagFill;
  AgentId agent = 0;
  std::optional<ItemId> anchor;  // original item id, reductions only
  Bundle slots;                  // in the ordered instance (same ids as the origin)
  Rational unit;                 // v_i(remaining) / n_remaining, original units
};

struct Solution {
  Allocation allocation;               // for the original instance
  std::vector<Rational> per_agent_value;
  Rational achieved_alpha;
  /// Per agent: the normalization unit v_i(M_t)/n_t in force when the agent
  /// was served. It bounds the agent's maximin share from above, and the
  /// solver certifies per_agent_value[i] >= achieved_alpha * unit[i].
  std::vector<Rational> unit;
  std::vector<SolveStep> trace;
  InvariantReport invariants;
};

struct SolveFailure {
  BagFillFailure reason = BagFillFailure::kNone;
};

class SolveResult {
 public:
  SolveResult(Solution solution) : solution_(std::move(solution)) {}  // NOLINT
  SolveResult(SolveFailure failure) : failure_(failure) {}            // NOLINT

  [[nodiscard]] bool ok() const noexcept { return solution_.has_value(); }
  [[nodiscard]] const Solution& solution() const { return solution_.value(); }
  [[nodiscard]] Solution& solution() { return solution_.value(); }
  [[nodiscard]] BagFillFailure failure() const noexcept {
    return solution_ ? BagFillFailure::kNone : failure_.reason;
  }

 private:
  std::optional<Solution> solution_;
  SolveFailure failure_;
};

struct SolveOptions {
  bool check_invariants = false;
};

/// Normalize, order, reduce while some item is worth alpha, bag-fill, recover.
///
/// Always succeeds for alpha <= 1/2, with every agent getting at least half
/// her maximin share. Above that it may fail. Throws InvalidInstance for an
/// invalid instance.
SolveResult solve(const Instance& inst, const Rational& alpha = Rational(1, 2),
                  const SolveOptions& options = {});

bool alpha_feasible(const Instance& inst, const Rational& alpha);

struct BisectResult {
  Rational best_alpha;
  Solution solution;
  std::size_t iterations = 0;
  Rational bracket_lo;
  Rational bracket_hi;
};

/// Largest alpha in [lo, hi] found feasible by bisection.
///
/// Returns hi when hi itself is feasible. Otherwise bisects for `iters`
/// rounds on exact rational midpoints and returns the best feasible probe,
/// re-solved from scratch. Throws std::runtime_error if lo is infeasible.
BisectResult bisect_alpha(const Instance& inst, const Rational& lo = Rational(1, 2),
                          const Rational& hi = Rational(2), std::size_t iters = 40);

}  // namespace mms

#endif  // MMS_PIPELINE_HPP
