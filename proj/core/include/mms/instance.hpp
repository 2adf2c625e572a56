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

#ifndef MMS_INSTANCE_HPP
#define MMS_INSTANCE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mms/rational.hpp"

namespace mms {

using AgentId = std::size_t;
using ItemId = std::size_t;
using Bundle = std::vector<ItemId>;

inline constexpr std::size_t kNoCategory = static_cast<std::size_t>(-1);

/// A group of items together with the most any one bundle may take from it.
struct Category {
  std::vector<ItemId> items;  // slot order: position j is "slot j"
  std::size_t k = 1;

  friend bool operator==(const Category&, const Category&) = default;
};

/// Thrown by normalize() for an agent whose items are all worth nothing.
class ZeroValueAgent : public std::domain_error {
 public:
  explicit ZeroValueAgent(AgentId agent)
      : std::domain_error("zero total value for agent " + std::to_string(agent)), agent_(agent) {}
  [[nodiscard]] AgentId agent() const noexcept { return agent_; }

 private:
  AgentId agent_;
};

/// Thrown when an operation requires a valid instance and gets one that is not.
class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(std::vector<std::string> violations);
  [[nodiscard]] const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Agents, items, additive valuations and the cardinality constraints.
///
/// Immutable once built. Item ids are 0-based. Categories that arrive empty
/// are dropped; everything else is stored as given, so an Instance can hold
/// structurally invalid data that validate_instance() will report.
class Instance {
 public:
  Instance() = default;
  /// `values[i][j]` is agent i's value for item j; all rows must share a length.
  Instance(std::vector<std::vector<Rational>> values, std::vector<Category> categories);
  /// For an instance with no agents' rows to infer m from (m = 0 is allowed).
  Instance(std::size_t n, std::size_t m, std::vector<Rational> flat_values,
           std::vector<Category> categories);

  [[nodiscard]] std::size_t agents() const noexcept { return n_; }
  [[nodiscard]] std::size_t items() const noexcept { return m_; }
  [[nodiscard]] const std::vector<Category>& categories() const noexcept { return categories_; }
  [[nodiscard]] const Category& category(std::size_t h) const { return categories_.at(h); }

  [[nodiscard]] const Rational& value(AgentId agent, ItemId item) const {
    return values_[agent * m_ + item];
  }
  [[nodiscard]] std::span<const Rational> row(AgentId agent) const {
    return {values_.data() + agent * m_, m_};
  }
  /// Category index of an item, or kNoCategory when the item is unassigned.
  [[nodiscard]] std::size_t category_of(ItemId item) const { return category_of_.at(item); }
  /// v_i(M).
  [[nodiscard]] const Rational& total_value(AgentId agent) const { return totals_.at(agent); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.values_ == b.values_ && a.categories_ == b.categories_;
  }

 private:
  void index();

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Rational> values_;
  std::vector<Category> categories_;
  std::vector<std::size_t> category_of_;
  std::vector<Rational> totals_;
};

/// n disjoint bundles, bundle i belonging to agent i.
struct Allocation {
  std::vector<Bundle> bundles;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Per-agent factors a_i with a_i * v_i(M) = n.
struct NormalizationRecord {
  std::vector<Rational> scale;
};

/// Every violated structural invariant, in human-readable form. Empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

/// Throws InvalidInstance when validate_instance() reports anything.
void require_valid(const Instance& inst);

/// Throws std::invalid_argument unless `alloc` partitions the items into n bundles.
void require_partition(const Instance& inst, const Allocation& alloc);

/// True iff no bundle takes more than k_h items from any category.
bool is_feasible(const Instance& inst, const Allocation& alloc);

/// True iff `items` respects every category threshold as a single bundle.
bool is_feasible_bundle(const Instance& inst, std::span<const ItemId> items);

Rational bundle_value(const Instance& inst, AgentId agent, std::span<const ItemId> items);

std::pair<Instance, NormalizationRecord> normalize(const Instance& inst);

/// True iff v_i(M) = n for every agent.
bool is_normalized(const Instance& inst);

/// v_i(M) / n, which bounds the agent's maximin share from above.
Rational mms_upper_bound(const Instance& inst, AgentId agent);

/// Copy of `inst` with agent rows multiplied by `scale` (one factor per agent).
Instance rescale(const Instance& inst, std::span<const Rational> scale);

}  // namespace mms

#endif  // MMS_INSTANCE_HPP
