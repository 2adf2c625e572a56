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

#include "mms/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mms {
namespace {

using nlohmann::json;

Rational to_rational(const json& v) {
  if (v.is_number_integer()) return {v.get<std::int64_t>()};
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("value must be an integer or a rational string, got " + v.dump());
}

json from_rational(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

std::size_t to_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const std::size_t n = to_index(field(doc, "n"), "n");
  const json& rows = field(doc, "values");
  if (!rows.is_array() || rows.size() != n) throw ParseError("\"values\" must hold one row per agent");
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  std::vector<Rational> values;
  values.reserve(n * m);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != m) throw ParseError("value rows must be arrays of equal length");
    for (const json& v : row) values.push_back(to_rational(v));
  }
  std::vector<Category> categories;
  const json& cats = field(doc, "categories");
  if (!cats.is_array()) throw ParseError("\"categories\" must be an array");
  for (const json& c : cats) {
    Category cat;
    cat.k = to_index(field(c, "k"), "k");
    const json& items = field(c, "items");
    if (!items.is_array()) throw ParseError("category \"items\" must be an array");
    for (const json& item : items) cat.items.push_back(to_index(item, "item id"));
    categories.push_back(std::move(cat));
  }
  return {n, m, std::move(values), std::move(categories)};
}

std::string format_instance(const Instance& inst) {
  json doc;
  doc["n"] = inst.agents();
  json rows = json::array();
  for (AgentId i = 0; i < inst.agents(); ++i) {
    json row = json::array();
    for (const auto& v : inst.row(i)) row.push_back(from_rational(v));
    rows.push_back(std::move(row));
  }
  doc["values"] = std::move(rows);
  json cats = json::array();
  for (const Category& c : inst.categories()) cats.push_back({{"items", c.items}, {"k", c.k}});
  doc["categories"] = std::move(cats);
  return doc.dump() + "\n";
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

void save_instance(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_instance(inst);
}

AllocationFile parse_allocation(std::string_view json_text) {
  const json doc = parse_json(json_text);
  AllocationFile out;
  const json& bundles = field(doc, "bundles");
  if (!bundles.is_array()) throw ParseError("\"bundles\" must be an array");
  for (const json& b : bundles) {
    if (!b.is_array()) throw ParseError("each bundle must be an array of item ids");
    Bundle bundle;
    for (const json& item : b) bundle.push_back(to_index(item, "item id"));
    out.allocation.bundles.push_back(std::move(bundle));
  }
  out.achieved_alpha = to_rational(field(doc, "achieved_alpha"));
  return out;
}

std::string format_allocation(const AllocationFile& file) {
  json doc;
  json bundles = json::array();
  for (const Bundle& b : file.allocation.bundles) bundles.push_back(b);
  doc["bundles"] = std::move(bundles);
  doc["achieved_alpha"] = file.achieved_alpha.str();
  return doc.dump() + "\n";
}

}  // namespace mms
