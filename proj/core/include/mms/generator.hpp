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

// Seeded random instances.
//
// Every random decision class draws from its own std::mt19937_64 stream,
// seeded with
//
//     splitmix64(seed ^ splitmix64((n << 8) | class))
//
// where class is 0 for m, 1 for the category count, 2 for item-to-category
// assignment, 3 for values and 4 for thresholds. Integers in [lo, hi] are
// drawn by rejection (x is redrawn while x < 2^64 mod (hi - lo + 1), then
// lo + x mod (hi - lo + 1)), so the output does not depend on the standard
// library's distributions and is reproducible across platforms.

#ifndef MMS_GENERATOR_HPP
#define MMS_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "mms/instance.hpp"

namespace mms {

struct GenParams {
  std::size_t n = 2;
  std::uint64_t seed = 0;
  std::size_t m_min = 0;  // 0: 2n
  std::size_t m_max = 0;  // 0: 4n
  std::int64_t value_min = 1;
  std::int64_t value_max = 100;
  std::size_t max_categories = 10;  // the count is drawn from [2, min(floor(m/2), this)]
};

std::uint64_t splitmix64(std::uint64_t x);

/// Unbiased draw from [lo, hi] as described above.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// ceil(size / d) with d = log2(n), or 1.5 when n = 2.
std::size_t threshold_cap(std::size_t size, std::size_t n);

/// Items get a uniform category, values are uniform integers, and each
/// nonempty category gets a threshold uniform in [ceil(|C|/n), threshold_cap]
/// (collapsing to the lower end when the range is empty). Empty categories
/// are dropped. Throws std::invalid_argument for n < 2.
Instance generate(const GenParams& params);

}  // namespace mms

#endif  // MMS_GENERATOR_HPP
