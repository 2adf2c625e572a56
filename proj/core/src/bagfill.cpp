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

#include "mms/bagfill.hpp"

#include <algorithm>
#include <optional>

#include "mms/ordered.hpp"

namespace mms {

std::string_view to_string(BagFillFailure failure) {
  switch (failure) {
    case BagFillFailure::kNone:
      return "none";
    case BagFillFailure::kExhaustedOperations:
      return "exhausted-operations";
    case BagFillFailure::kLastAgentShort:
      return "last-agent-short";
  }
  return "unknown";
}

InvariantReport& InvariantReport::operator+=(const InvariantReport& other) {
  checks += other.checks;
  remaining_value += other.remaining_value;
  increment += other.increment;
  feasibility += other.feasibility;
  balance += other.balance;
  return *this;
}

namespace {

// One round of bag building over the remaining items of one category.
// The bag holds positions [0, traded) from the top and the low block
// [size - q, size - traded) from the bottom, plus position q once added.
struct CategoryBag {
  std::size_t q = 0;
  std::size_t traded = 0;
  bool added = false;
};

class BagFiller {
 public:
  BagFiller(const Instance& inst, Rational alpha, const BagFillOptions& options)
      : inst_(inst), alpha_(std::move(alpha)), options_(options) {
    for (AgentId i = 0; i < inst.agents(); ++i) agents_.push_back(i);
    for (const Category& c : inst.categories()) remaining_.push_back(c.items);
    out_.allocation.bundles.resize(inst.agents());

    Rational top;
    for (AgentId i = 0; i < inst.agents(); ++i) {
      for (const auto& v : inst.row(i)) top = std::max(top, v);
    }
    const Rational half(1, 2);
    guaranteed_regime_ = alpha_ <= half && top < half;
  }

  BagFillOutcome run() {
    while (agents_.size() > 1) {
      if (!fill_one_bag()) {
        out_.failure = BagFillFailure::kExhaustedOperations;
        return std::move(out_);
      }
    }
    if (agents_.size() == 1) {
      const AgentId last = agents_.front();
      Bundle rest;
      for (const auto& items : remaining_) rest.insert(rest.end(), items.begin(), items.end());
      std::sort(rest.begin(), rest.end());
      if (bundle_value(inst_, last, rest) < alpha_) out_.failure = BagFillFailure::kLastAgentShort;
      out_.allocation.bundles[last] = rest;
      out_.steps.push_back({last, std::move(rest), false, true});
      for (auto& items : remaining_) items.clear();
      agents_.clear();
    }
    return std::move(out_);
  }

 private:
  bool fill_one_bag() {
    const std::size_t n = agents_.size();
    const std::size_t ell = remaining_.size();
    bag_.assign(ell, CategoryBag{});
    bag_value_.assign(n, Rational(0));
    for (std::size_t h = 0; h < ell; ++h) {
      const auto& items = remaining_[h];
      bag_[h].q = items.size() / n;
      for (std::size_t p = items.size() - bag_[h].q; p < items.size(); ++p) put(items[p], +1);
    }
    bool initial = true;
    for (;;) {
      if (const auto taker = first_taker()) {
        hand_out(*taker, initial);
        return true;
      }
      initial = false;
      if (!trade() && !add()) return false;
    }
  }

  // Lowest remaining-agent position whose value for the bag reaches alpha.
  std::optional<std::size_t> first_taker() const {
    for (std::size_t a = 0; a < agents_.size(); ++a) {
      if (bag_value_[a] >= alpha_) return a;
    }
    return std::nullopt;
  }

  void put(ItemId item, int sign) {
    for (std::size_t a = 0; a < agents_.size(); ++a) {
      const Rational& v = inst_.value(agents_[a], item);
      if (sign > 0) {
        bag_value_[a] += v;
      } else {
        bag_value_[a] -= v;
      }
    }
  }

  bool trade() {
    for (std::size_t h = 0; h < remaining_.size(); ++h) {
      CategoryBag& b = bag_[h];
      if (b.traded == b.q) continue;
      const auto& items = remaining_[h];
      put(items[items.size() - 1 - b.traded], -1);
      put(items[b.traded], +1);
      ++b.traded;
      ++out_.trades;
      return true;
    }
    return false;
  }

  bool add() {
    const std::size_t n = agents_.size();
    for (std::size_t h = 0; h < remaining_.size(); ++h) {
      CategoryBag& b = bag_[h];
      if (b.added || remaining_[h].size() % n == 0) continue;
      put(remaining_[h][b.q], +1);
      b.added = true;
      ++out_.adds;
      return true;
    }
    return false;
  }

  void hand_out(std::size_t taker, bool initial) {
    const std::size_t n = agents_.size();
    const AgentId agent = agents_[taker];
    Bundle bundle;
    std::vector<std::vector<ItemId>> rest(remaining_.size());
    for (std::size_t h = 0; h < remaining_.size(); ++h) {
      const auto& items = remaining_[h];
      const CategoryBag& b = bag_[h];
      const std::size_t size = items.size();
      for (std::size_t p = 0; p < size; ++p) {
        const bool in_bag = p < b.traded || (b.added && p == b.q) ||
                            (p >= size - b.q && p < size - b.traded);
        (in_bag ? bundle : rest[h]).push_back(items[p]);
      }
      if (options_.check_invariants) {
        const std::size_t taken = size - rest[h].size();
        const std::size_t ceil_share = (size + n - 1) / n;
        if (taken > ceil_share || taken > inst_.categories()[h].k) ++out_.invariants.feasibility;
        if (rest[h].size() > (n - 1) * inst_.categories()[h].k) ++out_.invariants.balance;
      }
    }
    std::sort(bundle.begin(), bundle.end());

    if (options_.check_invariants) {
      ++out_.invariants.checks;
      if (guaranteed_regime_) {
        const Rational ceiling = alpha_ * Rational(2);
        if (!initial) {
          for (std::size_t a = 0; a < n; ++a) {
            if (bag_value_[a] >= ceiling) ++out_.invariants.increment;
          }
        }
        const Rational needed(static_cast<std::int64_t>(n - 1));
        for (std::size_t a = 0; a < n; ++a) {
          if (a == taker) continue;
          Rational left;
          for (const auto& items : rest) left += bundle_value(inst_, agents_[a], items);
          if (left < needed) ++out_.invariants.remaining_value;
        }
      }
    }

    out_.allocation.bundles[agent] = bundle;
    out_.steps.push_back({agent, std::move(bundle), initial, false});
    remaining_ = std::move(rest);
    agents_.erase(agents_.begin() + static_cast<std::ptrdiff_t>(taker));
  }

  const Instance& inst_;
  Rational alpha_;
  BagFillOptions options_;
  bool guaranteed_regime_ = false;

  std::vector<AgentId> agents_;
  std::vector<std::vector<ItemId>> remaining_;  // per category, slot order
  std::vector<CategoryBag> bag_;
  std::vector<Rational> bag_value_;  // per remaining-agent position
  BagFillOutcome out_;
};

}  // namespace

BagFillOutcome run_bagfill(const Instance& inst, const Rational& alpha, const BagFillOptions& options) {
  require_valid(inst);
  if (!is_normalized(inst)) throw std::invalid_argument("bag filling needs a normalized instance");
  if (!is_ordered(inst)) throw std::invalid_argument("bag filling needs an ordered instance");
  return BagFiller(inst, alpha, options).run();
}

}  // namespace mms
