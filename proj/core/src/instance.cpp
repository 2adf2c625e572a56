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

#include "mms/instance.hpp"

#include <algorithm>
#include <sstream>

namespace mms {
namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out = "invalid instance:";
  for (const auto& line : lines) out += "\n  " + line;
  return out;
}

std::vector<Category> strip_empty(std::vector<Category> categories) {
  std::erase_if(categories, [](const Category& c) { return c.items.empty(); });
  return categories;
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<std::string> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

Instance::Instance(std::vector<std::vector<Rational>> values, std::vector<Category> categories)
    : n_(values.size()), m_(values.empty() ? 0 : values.front().size()),
      categories_(strip_empty(std::move(categories))) {
  values_.reserve(n_ * m_);
  for (auto& row : values) {
    if (row.size() != m_) throw std::invalid_argument("value rows have different lengths");
    values_.insert(values_.end(), row.begin(), row.end());
  }
  index();
}

Instance::Instance(std::size_t n, std::size_t m, std::vector<Rational> flat_values,
                   std::vector<Category> categories)
    : n_(n), m_(m), values_(std::move(flat_values)), categories_(strip_empty(std::move(categories))) {
  if (values_.size() != n_ * m_) throw std::invalid_argument("value matrix is not n x m");
  index();
}

void Instance::index() {
  category_of_.assign(m_, kNoCategory);
  for (std::size_t h = 0; h < categories_.size(); ++h) {
    for (const ItemId item : categories_[h].items) {
      if (item < m_ && category_of_[item] == kNoCategory) category_of_[item] = h;
    }
  }
  totals_.assign(n_, Rational(0));
  for (AgentId i = 0; i < n_; ++i) {
    Rational sum;
    for (const auto& v : row(i)) sum += v;
    totals_[i] = sum;
  }
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  if (n == 0) out.emplace_back("instance has no agents");

  std::vector<std::size_t> seen(m, 0);
  for (std::size_t h = 0; h < inst.categories().size(); ++h) {
    const Category& c = inst.categories()[h];
    if (c.k == 0) out.push_back("category " + std::to_string(h) + " has threshold k=0");
    for (const ItemId item : c.items) {
      if (item >= m) {
        out.push_back("category " + std::to_string(h) + " references unknown item " +
                      std::to_string(item));
      } else {
        ++seen[item];
      }
    }
    if (n > 0 && c.k > 0 && c.items.size() > n * c.k) {
      std::ostringstream msg;
      msg << "|C_" << h << "|=" << c.items.size() << " > n*k=" << n * c.k;
      out.push_back(msg.str());
    }
  }
  for (ItemId j = 0; j < m; ++j) {
    if (seen[j] == 0) out.push_back("item " + std::to_string(j) + " is in no category");
    if (seen[j] > 1) out.push_back("item " + std::to_string(j) + " multiply assigned");
  }
  for (AgentId i = 0; i < n; ++i) {
    for (ItemId j = 0; j < m; ++j) {
      if (inst.value(i, j) < Rational(0)) {
        out.push_back("negative value v[" + std::to_string(i) + "][" + std::to_string(j) +
                      "]=" + inst.value(i, j).str());
      }
    }
  }
  return out;
}

void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
}

void require_partition(const Instance& inst, const Allocation& alloc) {
  if (alloc.bundles.size() != inst.agents()) {
    throw std::invalid_argument("allocation has " + std::to_string(alloc.bundles.size()) +
                                " bundles for " + std::to_string(inst.agents()) + " agents");
  }
  std::vector<bool> taken(inst.items(), false);
  for (const auto& bundle : alloc.bundles) {
    for (const ItemId item : bundle) {
      if (item >= inst.items()) {
        throw std::invalid_argument("allocation references unknown item " + std::to_string(item));
      }
      if (taken[item]) {
        throw std::invalid_argument("item " + std::to_string(item) + " allocated twice");
      }
      taken[item] = true;
    }
  }
  if (const auto it = std::find(taken.begin(), taken.end(), false); it != taken.end()) {
    throw std::invalid_argument("item " + std::to_string(it - taken.begin()) + " is not allocated");
  }
}

bool is_feasible_bundle(const Instance& inst, std::span<const ItemId> items) {
  std::vector<std::size_t> count(inst.categories().size(), 0);
  for (const ItemId item : items) {
    const std::size_t h = inst.category_of(item);
    if (h == kNoCategory) continue;
    if (++count[h] > inst.categories()[h].k) return false;
  }
  return true;
}

bool is_feasible(const Instance& inst, const Allocation& alloc) {
  require_partition(inst, alloc);
  return std::all_of(alloc.bundles.begin(), alloc.bundles.end(),
                     [&](const Bundle& b) { return is_feasible_bundle(inst, b); });
}

Rational bundle_value(const Instance& inst, AgentId agent, std::span<const ItemId> items) {
  if (agent >= inst.agents()) throw std::out_of_range("unknown agent " + std::to_string(agent));
  Rational sum;
  for (const ItemId item : items) {
    if (item >= inst.items()) throw std::out_of_range("unknown item " + std::to_string(item));
    sum += inst.value(agent, item);
  }
  return sum;
}

Instance rescale(const Instance& inst, std::span<const Rational> scale) {
  if (scale.size() != inst.agents()) throw std::invalid_argument("one scale factor per agent");
  std::vector<Rational> values;
  values.reserve(inst.agents() * inst.items());
  for (AgentId i = 0; i < inst.agents(); ++i) {
    for (const auto& v : inst.row(i)) values.push_back(v * scale[i]);
  }
  return {inst.agents(), inst.items(), std::move(values), inst.categories()};
}

std::pair<Instance, NormalizationRecord> normalize(const Instance& inst) {
  NormalizationRecord record;
  record.scale.reserve(inst.agents());
  const Rational n(static_cast<std::int64_t>(inst.agents()));
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (inst.total_value(i).is_zero()) throw ZeroValueAgent(i);
    record.scale.push_back(n / inst.total_value(i));
  }
  return {rescale(inst, record.scale), std::move(record)};
}

bool is_normalized(const Instance& inst) {
  const Rational n(static_cast<std::int64_t>(inst.agents()));
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (inst.total_value(i) != n) return false;
  }
  return true;
}

Rational mms_upper_bound(const Instance& inst, AgentId agent) {
  if (agent >= inst.agents()) throw std::out_of_range("unknown agent " + std::to_string(agent));
  return inst.total_value(agent) / Rational(static_cast<std::int64_t>(inst.agents()));
}

}  // namespace mms
