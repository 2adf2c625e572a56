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

// JSON file formats. Item ids are 0-based.
//
// Instance:
//   {"n": 2,
//    "values": [[10, 8, "13/2", 4], [10, 8, 6, 4]],
//    "categories": [{"items": [0, 1, 2, 3], "k": 2}]}
// Values are integers or exact rationals written as strings ("3/7", "0.25").
//
// Allocation:
//   {"bundles": [[0, 3], [1, 2]], "achieved_alpha": "1/2"}

#ifndef MMS_IO_HPP
#define MMS_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mms/instance.hpp"

namespace mms {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON shape only; call validate_instance() for the invariants.
Instance parse_instance(std::string_view json_text);
std::string format_instance(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& inst);

struct AllocationFile {
  Allocation allocation;
  Rational achieved_alpha;

  friend bool operator==(const AllocationFile&, const AllocationFile&) = default;
};

AllocationFile parse_allocation(std::string_view json_text);
std::string format_allocation(const AllocationFile& file);

}  // namespace mms

#endif  // MMS_IO_HPP
