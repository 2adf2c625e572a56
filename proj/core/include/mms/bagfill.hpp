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

#ifndef MMS_BAGFILL_HPP
#define MMS_BAGFILL_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "mms/instance.hpp"

namespace mms {

enum class BagFillFailure {
  kNone,
  /// Every trade and add was spent and nobody values the bag at alpha.
  kExhaustedOperations,
  /// The sole remaining agent values the leftovers below alpha.
  kLastAgentShort,
};

std::string_view to_string(BagFillFailure failure);

struct BagFillOptions {
  /// Evaluate the runtime invariants below and count violations.
  bool check_invariants = false;
};

/// Violation counters filled when BagFillOptions::check_invariants is set.
///
/// The remaining-value and increment checks only apply in the guaranteed
/// regime (alpha <= 1/2 and every item worth less than 1/2); `checks` counts
/// how many allocations were inspected.
struct InvariantReport {
  std::size_t checks = 0;
  std::size_t remaining_value = 0;  // a remaining agent values what is left below n_rem
  std::size_t increment = 0;        // a non-initial bag handed out worth >= 2*alpha to someone
  std::size_t feasibility = 0;      // a bag with more than ceil(|C_h|/n_rem) or k_h items of C_h
  std::size_t balance = 0;          // afterwards |C_h| > n_rem * k_h

  [[nodiscard]] std::size_t violations() const {
    return remaining_value + increment + feasibility + balance;
  }
  InvariantReport& operator+=(const InvariantReport& other);
};

struct BagFillStep {
  AgentId agent = 0;
  Bundle bundle;
  bool initial_bag = false;  // handed out before any trade or add
  bool leftover = false;     // the last agent's share
};

struct BagFillOutcome {
  /// Indexed by the input instance's agents. On failure only the bundles
  /// handed out before the failure are filled.
  Allocation allocation;
  BagFillFailure failure = BagFillFailure::kNone;
  std::vector<BagFillStep> steps;
  std::size_t trades = 0;
  std::size_t adds = 0;
  InvariantReport invariants;

  [[nodiscard]] bool ok() const { return failure == BagFillFailure::kNone; }
};

/// Constrained bag filling on a normalized ordered instance.
///
/// Each round starts the bag with the floor(|C_h|/n) deepest remaining slots
/// of every category. While nobody values it at alpha, the bag trades its
/// deepest low slot of the first such category for the shallowest top slot
/// not yet in it; once all low slots are traded it adds slot floor(|C_h|/n)
/// of the first category whose size is not a multiple of n. The lowest-index
/// agent reaching alpha takes the bag. The last agent takes what is left.
///
/// With every value below 1/2 and alpha = 1/2 this always succeeds. Larger
/// alpha may fail in either of the two ways BagFillFailure describes. Throws
/// std::invalid_argument if the instance is not normalized and ordered.
BagFillOutcome run_bagfill(const Instance& inst, const Rational& alpha,
                           const BagFillOptions& options = {});

}  // namespace mms

#endif  // MMS_BAGFILL_HPP
