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

#include "mms/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mms {
namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("denominator lcm overflow");
  return static_cast<std::int64_t>(l);
}

std::int64_t scaled(const Rational& v, std::int64_t lcm) {
  const __int128 s = static_cast<__int128>(v.num()) * (lcm / v.den());
  if (s > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("scaled value overflow");
  return static_cast<std::int64_t>(s);
}

// Agent `agent`'s row as integers sharing the common factor `lcm`.
std::vector<std::int64_t> integer_row(const Instance& inst, AgentId agent, std::int64_t& lcm,
                                      const Rational* extra = nullptr) {
  lcm = extra ? extra->den() : 1;
  for (const auto& v : inst.row(agent)) lcm = checked_lcm(lcm, v.den());
  std::vector<std::int64_t> out;
  out.reserve(inst.items());
  std::int64_t total = 0;
  for (const auto& v : inst.row(agent)) {
    out.push_back(scaled(v, lcm));
    if (__builtin_add_overflow(total, out.back(), &total)) throw std::overflow_error("value sum overflow");
  }
  return out;
}

// Places every item of `todo` into some bundle with room left in its category.
void place_rest(const Instance& inst, std::span<const ItemId> todo, std::vector<std::size_t>& count,
              Allocation& alloc) {
  const std::size_t ell = inst.categories().size();
  for (const ItemId j : todo) {
    const std::size_t h = inst.category_of(j);
    for (std::size_t t = 0; t < alloc.bundles.size(); ++t) {
      if (count[t * ell + h] < inst.categories()[h].k) {
        ++count[t * ell + h];
        alloc.bundles[t].push_back(j);
        break;
      }
    }
  }
  for (auto& b : alloc.bundles) std::sort(b.begin(), b.end());
}

class MaxMinSearch {
 public:
  MaxMinSearch(const Instance& inst, std::vector<std::int64_t> weights, std::uint64_t budget)
      : inst_(inst), w_(std::move(weights)), budget_(budget), n_(inst.agents()),
        ell_(inst.categories().size()) {
    for (ItemId j = 0; j < inst.items(); ++j) {
      if (w_[j] > 0) {
        order_.push_back(j);
      } else {
        idle_.push_back(j);
      }
    }
    std::stable_sort(order_.begin(), order_.end(), [&](ItemId a, ItemId b) { return w_[a] > w_[b]; });
    rest_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) rest_[i] = rest_[i + 1] + w_[order_[i]];
    ceiling_ = order_.size() < n_ ? 0 : rest_[0] / static_cast<std::int64_t>(n_);
    load_.assign(n_, 0);
    count_.assign(n_ * ell_, 0);
    place_.assign(order_.size(), 0);
  }

  void run() {
    descend(0, 0);
    complete_ = !aborted_;
  }

  [[nodiscard]] std::int64_t best() const { return best_; }
  [[nodiscard]] std::int64_t ceiling() const { return ceiling_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] bool complete() const { return complete_; }

  [[nodiscard]] Allocation witness() const {
    Allocation alloc;
    alloc.bundles.resize(n_);
    std::vector<std::size_t> count(n_ * ell_, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const ItemId j = order_[i];
      alloc.bundles[best_place_[i]].push_back(j);
      ++count[best_place_[i] * ell_ + inst_.category_of(j)];
    }
    place_rest(inst_, idle_, count, alloc);
    return alloc;
  }

 private:
  void descend(std::size_t idx, std::size_t opened) {
    if (done_) return;
    if (++nodes_ > budget_) {
      aborted_ = done_ = true;
      return;
    }
    if (idx == order_.size()) {
      const std::int64_t low = *std::min_element(load_.begin(), load_.end());
      if (low > best_) {
        best_ = low;
        best_place_ = place_;
        if (best_ >= ceiling_) done_ = true;
      }
      return;
    }
    // Every bundle must reach best_ + 1 to improve on the incumbent.
    std::int64_t deficit = 0;
    for (const std::int64_t l : load_) deficit += std::max<std::int64_t>(0, best_ + 1 - l);
    if (deficit > rest_[idx]) return;

    const ItemId j = order_[idx];
    const std::size_t h = inst_.category_of(j);
    const std::size_t k = inst_.categories()[h].k;
    std::size_t candidates[64];
    std::size_t count = 0;
    const std::size_t limit = std::min(opened + 1, n_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (count_[t * ell_ + h] < k) candidates[count++] = t;
    }
    std::sort(candidates, candidates + count, [&](std::size_t a, std::size_t b) {
      return load_[a] != load_[b] ? load_[a] < load_[b] : a < b;
    });
    for (std::size_t c = 0; c < count; ++c) {
      const std::size_t t = candidates[c];
      load_[t] += w_[j];
      ++count_[t * ell_ + h];
      place_[idx] = t;
      descend(idx + 1, t == opened ? opened + 1 : opened);
      load_[t] -= w_[j];
      --count_[t * ell_ + h];
      if (done_) return;
    }
  }

  const Instance& inst_;
  std::vector<std::int64_t> w_;
  std::uint64_t budget_;
  std::size_t n_;
  std::size_t ell_;
  std::vector<ItemId> order_;
  std::vector<ItemId> idle_;
  std::vector<std::int64_t> rest_;
  std::int64_t ceiling_ = 0;
  std::vector<std::int64_t> load_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> place_;
  std::vector<std::size_t> best_place_;
  std::int64_t best_ = -1;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  bool aborted_ = false;
  bool complete_ = false;
};

// Compares a/b with c/d for positive b, d.
bool ratio_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

class ProportionSearch {
 public:
  ProportionSearch(const Instance& inst, const std::vector<Rational>& mms, std::uint64_t budget)
      : inst_(inst), budget_(budget), n_(inst.agents()), ell_(inst.categories().size()) {
    for (AgentId a = 0; a < n_; ++a) {
      if (mms[a].is_zero()) continue;
      std::int64_t lcm = 1;
      auto row = integer_row(inst, a, lcm, &mms[a]);
      agents_.push_back({a, std::move(row), scaled(mms[a], lcm), {}});
    }
    std::vector<double> key(inst.items(), 0.0);
    for (ItemId j = 0; j < inst.items(); ++j) {
      bool wanted = false;
      for (const auto& ag : agents_) {
        if (ag.w[j] > 0) wanted = true;
        key[j] = std::max(key[j], static_cast<double>(ag.w[j]) / static_cast<double>(ag.share));
      }
      (wanted ? order_ : idle_).push_back(j);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](ItemId a, ItemId b) { return key[a] > key[b]; });
    pos_.assign(inst.items(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
    for (auto& ag : agents_) {
      ag.by_value = order_;
      std::stable_sort(ag.by_value.begin(), ag.by_value.end(),
                       [&](ItemId a, ItemId b) { return ag.w[a] > ag.w[b]; });
    }
    place_.assign(order_.size(), kDiscard);
    load_.assign(agents_.size(), 0);
    count_.assign(n_ * ell_, 0);
  }

  void run() { descend(0); }

  [[nodiscard]] bool aborted() const { return aborted_; }
  [[nodiscard]] bool unbounded() const { return agents_.empty(); }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] const Allocation& witness() const { return best_alloc_; }
  [[nodiscard]] Rational best() const { return {best_num_, best_den_}; }

 private:
  static constexpr std::size_t kDiscard = static_cast<std::size_t>(-1);

  struct Agent {
    AgentId id;
    std::vector<std::int64_t> w;
    std::int64_t share;
    std::vector<ItemId> by_value;
  };

  // Most agent slot `s` could still collect from undecided items.
  std::int64_t optimistic(std::size_t s, std::size_t idx, std::vector<std::size_t>& room) const {
    const Agent& ag = agents_[s];
    for (std::size_t h = 0; h < ell_; ++h) {
      room[h] = inst_.categories()[h].k - count_[ag.id * ell_ + h];
    }
    std::int64_t total = load_[s];
    for (const ItemId j : ag.by_value) {
      if (pos_[j] < idx || ag.w[j] == 0) continue;
      std::size_t& r = room[inst_.category_of(j)];
      if (r == 0) continue;
      --r;
      total += ag.w[j];
    }
    return total;
  }

  void leaf() {
    Allocation alloc;
    alloc.bundles.resize(n_);
    std::vector<std::size_t> count = count_;
    std::vector<ItemId> todo = idle_;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (place_[i] == kDiscard) {
        todo.push_back(order_[i]);
      } else {
        alloc.bundles[agents_[place_[i]].id].push_back(order_[i]);
      }
    }
    place_rest(inst_, todo, count, alloc);
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool first = true;
    for (const Agent& ag : agents_) {
      std::int64_t v = 0;
      for (const ItemId j : alloc.bundles[ag.id]) v += ag.w[j];
      if (first || ratio_less(v, ag.share, num, den)) {
        num = v;
        den = ag.share;
        first = false;
      }
    }
    if (!found_ || ratio_less(best_num_, best_den_, num, den)) {
      found_ = true;
      best_num_ = num;
      best_den_ = den;
      best_alloc_ = std::move(alloc);
    }
  }

  void descend(std::size_t idx) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (idx == order_.size()) {
      leaf();
      return;
    }
    if (found_) {
      std::vector<std::size_t> room(ell_);
      for (std::size_t s = 0; s < agents_.size(); ++s) {
        if (!ratio_less(best_num_, best_den_, optimistic(s, idx, room), agents_[s].share)) return;
      }
    }
    const ItemId j = order_[idx];
    const std::size_t h = inst_.category_of(j);
    std::vector<std::size_t> slots;
    for (std::size_t s = 0; s < agents_.size(); ++s) {
      if (agents_[s].w[j] > 0 && count_[agents_[s].id * ell_ + h] < inst_.categories()[h].k) {
        slots.push_back(s);
      }
    }
    // Worst-off agent first.
    std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) {
      return ratio_less(load_[a], agents_[a].share, load_[b], agents_[b].share);
    });
    for (const std::size_t s : slots) {
      const std::size_t cell = agents_[s].id * ell_ + h;
      load_[s] += agents_[s].w[j];
      ++count_[cell];
      place_[idx] = s;
      descend(idx + 1);
      load_[s] -= agents_[s].w[j];
      --count_[cell];
      if (aborted_) return;
    }
    place_[idx] = kDiscard;
    descend(idx + 1);
  }

  const Instance& inst_;
  std::uint64_t budget_;
  std::size_t n_;
  std::size_t ell_;
  std::vector<Agent> agents_;
  std::vector<ItemId> order_;
  std::vector<ItemId> idle_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> place_;
  std::vector<std::int64_t> load_;
  std::vector<std::size_t> count_;
  bool found_ = false;
  std::int64_t best_num_ = 0;
  std::int64_t best_den_ = 1;
  Allocation best_alloc_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ExactResult exact_mms(const Instance& inst, AgentId agent, const ExactOptions& options) {
  require_valid(inst);
  if (agent >= inst.agents()) throw std::out_of_range("unknown agent " + std::to_string(agent));
  if (inst.agents() > 64) throw std::invalid_argument("exact_mms supports at most 64 agents");
  std::int64_t lcm = 1;
  auto weights = integer_row(inst, agent, lcm);
  MaxMinSearch search(inst, std::move(weights), options.node_budget);
  search.run();

  ExactResult out;
  out.nodes_explored = search.nodes();
  out.complete = search.complete();
  out.upper_bound = Rational(search.ceiling(), lcm);
  if (search.best() < 0) {
    // Budget ran out before the first leaf.
    out.mms = Rational(0);
    Allocation empty;
    empty.bundles.resize(inst.agents());
    std::vector<std::size_t> count(inst.agents() * inst.categories().size(), 0);
    std::vector<ItemId> all(inst.items());
    std::iota(all.begin(), all.end(), ItemId{0});
    place_rest(inst, all, count, empty);
    out.witness = std::move(empty);
    out.complete = false;
    return out;
  }
  out.mms = Rational(search.best(), lcm);
  out.witness = search.witness();
  return out;
}

std::vector<Rational> exact_mms_all(const Instance& inst, const ExactOptions& options) {
  std::vector<Rational> out;
  out.reserve(inst.agents());
  for (AgentId i = 0; i < inst.agents(); ++i) {
    ExactResult r = exact_mms(inst, i, options);
    if (!r.complete) throw OracleBudgetExceeded();
    out.push_back(r.mms);
  }
  return out;
}

double Proportion::to_double() const {
  return unbounded ? std::numeric_limits<double>::infinity() : value.to_double();
}

Proportion allocation_proportion(const Instance& inst, const Allocation& alloc,
                                 const std::vector<Rational>& mms) {
  if (mms.size() != inst.agents()) throw std::invalid_argument("one share per agent");
  if (!is_feasible(inst, alloc)) throw std::invalid_argument("allocation is not feasible");
  Proportion out{Rational(0), true};
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (mms[i].is_zero()) continue;
    const Rational r = bundle_value(inst, i, alloc.bundles[i]) / mms[i];
    if (out.unbounded || r < out.value) out = {r, false};
  }
  return out;
}

Proportion allocation_proportion(const Instance& inst, const Allocation& alloc,
                                 const ExactOptions& options) {
  return allocation_proportion(inst, alloc, exact_mms_all(inst, options));
}

OptimalProportion optimal_proportion(const Instance& inst, const ExactOptions& options) {
  OptimalProportion out;
  out.mms = exact_mms_all(inst, options);
  ProportionSearch search(inst, out.mms, options.node_budget);
  search.run();
  if (search.aborted()) throw OracleBudgetExceeded();
  out.nodes_explored = search.nodes();
  out.witness = search.witness();
  out.best = search.unbounded() ? Proportion{Rational(0), true} : Proportion{search.best(), false};
  return out;
}

}  // namespace mms
