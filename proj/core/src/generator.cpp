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

#include "mms/generator.hpp"

#include <algorithm>
#include <cmath>

namespace mms {
namespace {

enum StreamClass : std::uint64_t {
  kItemCount = 0,
  kCategoryCount = 1,
  kAssignment = 2,
  kValues = 3,
  kThresholds = 4,
};

std::mt19937_64 stream(const GenParams& p, StreamClass cls) {
  return std::mt19937_64(splitmix64(p.seed ^ splitmix64((static_cast<std::uint64_t>(p.n) << 8) | cls)));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();  // the full 64-bit range
  const std::uint64_t reject_below = (0 - span) % span;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= reject_below) return lo + x % span;
  }
}

std::size_t threshold_cap(std::size_t size, std::size_t n) {
  if (n == 2) return (2 * size + 2) / 3;  // ceil(size / 1.5)
  return static_cast<std::size_t>(std::ceil(static_cast<double>(size) / std::log2(static_cast<double>(n))));
}

Instance generate(const GenParams& p) {
  if (p.n < 2) throw std::invalid_argument("the generator needs n >= 2");
  const std::size_t m_lo = p.m_min ? p.m_min : 2 * p.n;
  const std::size_t m_hi = p.m_max ? p.m_max : 4 * p.n;
  if (m_hi < m_lo || m_lo < 4) throw std::invalid_argument("item range must lie within [4, inf)");
  if (p.value_max < p.value_min || p.value_min < 0) throw std::invalid_argument("bad value range");

  auto rng_m = stream(p, kItemCount);
  const std::size_t m = uniform_int(rng_m, m_lo, m_hi);

  auto rng_l = stream(p, kCategoryCount);
  const std::size_t ell = uniform_int(rng_l, 2, std::max<std::size_t>(2, std::min(m / 2, p.max_categories)));

  auto rng_a = stream(p, kAssignment);
  std::vector<Category> drawn(ell);
  for (ItemId j = 0; j < m; ++j) drawn[uniform_int(rng_a, 0, ell - 1)].items.push_back(j);
  std::erase_if(drawn, [](const Category& c) { return c.items.empty(); });

  auto rng_v = stream(p, kValues);
  std::vector<Rational> values;
  values.reserve(p.n * m);
  for (std::size_t k = 0; k < p.n * m; ++k) {
    values.emplace_back(static_cast<std::int64_t>(uniform_int(
        rng_v, static_cast<std::uint64_t>(p.value_min), static_cast<std::uint64_t>(p.value_max))));
  }

  auto rng_k = stream(p, kThresholds);
  for (Category& c : drawn) {
    const std::size_t size = c.items.size();
    const std::size_t lo = (size + p.n - 1) / p.n;
    const std::size_t hi = std::max(lo, threshold_cap(size, p.n));
    c.k = uniform_int(rng_k, lo, hi);
  }
  return {p.n, m, std::move(values), std::move(drawn)};
}

}  // namespace mms
