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

// Exponential-time oracles for small instances: an agent's exact maximin
// share, and the best attainable fraction of it for everyone at once.

#ifndef MMS_EXACT_HPP
#define MMS_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mms/instance.hpp"

namespace mms {

struct ExactOptions {
  std::uint64_t node_budget = 100'000'000;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  OracleBudgetExceeded() : std::runtime_error("oracle node budget exceeded") {}
};

struct ExactResult {
  Rational mms;             // best found; exact when `complete`
  Rational upper_bound;     // v_i(M)/n rounded to what the search can reach
  Allocation witness;       // feasible, min bundle value == mms for the agent
  std::uint64_t nodes_explored = 0;
  bool complete = true;     // false when the node budget ran out
};

/// max over feasible allocations of the agent's least valuable bundle.
///
/// Depth-first: items in descending value go to bundles with room in their
/// category, least loaded first, and a bundle is opened only after all lower
/// ones. A branch is cut when the remaining value cannot lift every bundle
/// above the incumbent. Items the agent does not value are placed afterwards,
/// which is always possible in a valid instance.
ExactResult exact_mms(const Instance& inst, AgentId agent, const ExactOptions& options = {});

/// A ratio that may be unbounded (an agent whose maximin share is zero).
struct Proportion {
  Rational value;
  bool unbounded = false;

  [[nodiscard]] double to_double() const;
  friend bool operator==(const Proportion&, const Proportion&) = default;
};

/// min_i v_i(A_i) / mu_i, agents with mu_i = 0 counting as unbounded.
/// Throws OracleBudgetExceeded if some mu_i cannot be settled.
Proportion allocation_proportion(const Instance& inst, const Allocation& alloc,
                                 const ExactOptions& options = {});

/// As above, but for every agent given the precomputed shares.
Proportion allocation_proportion(const Instance& inst, const Allocation& alloc,
                                 const std::vector<Rational>& mms);

/// All agents' exact shares. Throws OracleBudgetExceeded.
std::vector<Rational> exact_mms_all(const Instance& inst, const ExactOptions& options = {});

struct OptimalProportion {
  Proportion best;
  Allocation witness;
  std::vector<Rational> mms;
  std::uint64_t nodes_explored = 0;
};

/// max over feasible allocations of min_i v_i(A_i) / mu_i. Throws
/// OracleBudgetExceeded when either search runs out of nodes.
OptimalProportion optimal_proportion(const Instance& inst, const ExactOptions& options = {});

}  // namespace mms

#endif  // MMS_EXACT_HPP
