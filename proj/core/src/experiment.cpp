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

#include "mms/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "mms/generator.hpp"
#include "mms/io.hpp"
#include "mms/pipeline.hpp"

namespace mms {
namespace {

constexpr const char* kColumns[] = {"id",     "seed",           "n",              "m",
                                    "ell",    "mode",           "status",         "achieved_alpha",
                                    "exact_min_ratio", "full_mms", "oracle",      "wall_ms"};

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* to_cstr(SolverMode mode) { return mode == SolverMode::kBisect ? "bisect" : "fixed-half"; }

const char* to_cstr(OracleStatus s) {
  switch (s) {
    case OracleStatus::kOk:
      return "ok";
    case OracleStatus::kBudget:
      return "budget";
    case OracleStatus::kNone:
      break;
  }
  return "none";
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + s + "'");
  }
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

}  // namespace

std::size_t default_workers() {
  if (const char* env = std::getenv("MMS_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ReportRow bench_instance(const Instance& inst, std::string id, std::uint64_t seed, SolverMode mode,
                         bool oracle, std::uint64_t node_budget) {
  ReportRow row;
  row.id = std::move(id);
  row.seed = seed;
  row.n = inst.agents();
  row.m = inst.items();
  row.ell = inst.categories().size();
  row.mode = mode;

  const auto start = std::chrono::steady_clock::now();
  std::optional<Allocation> alloc;
  if (mode == SolverMode::kBisect) {
    try {
      BisectResult r = bisect_alpha(inst);
      row.achieved_alpha = r.best_alpha.to_double();
      alloc = std::move(r.solution.allocation);
    } catch (const std::runtime_error& e) {
      row.status = "fail:bisect-lo-infeasible";
    }
  } else {
    SolveResult r = solve(inst, Rational(1, 2));
    if (r.ok()) {
      row.achieved_alpha = r.solution().achieved_alpha.to_double();
      alloc = std::move(r.solution().allocation);
    } else {
      row.status = "fail:" + std::string(to_string(r.failure()));
    }
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (oracle && alloc) {
    try {
      const Proportion p = allocation_proportion(inst, *alloc, ExactOptions{node_budget});
      row.exact_min_ratio = p.to_double();
      row.full_mms = p.unbounded || p.value >= Rational(1);
      row.oracle = OracleStatus::kOk;
    } catch (const OracleBudgetExceeded&) {
      row.oracle = OracleStatus::kBudget;
    }
  }
  return row;
}

std::vector<ReportRow> run_bench(const BenchConfig& config) {
  struct Job {
    std::size_t n;
    std::size_t idx;
  };
  std::vector<Job> jobs;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    for (std::size_t i = 0; i < config.count; ++i) jobs.push_back({n, i});
  }
  std::vector<ReportRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const std::uint64_t seed = config.seed + jobs[j].idx;
      const Instance inst = generate({.n = jobs[j].n, .seed = seed});
      rows[j] = bench_instance(inst, "n" + std::to_string(jobs[j].n) + "-" + std::to_string(jobs[j].idx),
                               seed, config.mode, config.oracle, config.node_budget);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows) {
  for (std::size_t c = 0; c < std::size(kColumns); ++c) out << (c ? "\t" : "") << kColumns[c];
  out << '\n';
  for (const ReportRow& r : rows) {
    out << r.id << '\t' << r.seed << '\t' << r.n << '\t' << r.m << '\t' << r.ell << '\t'
        << to_cstr(r.mode) << '\t' << r.status << '\t' << (r.ok() ? fmt(r.achieved_alpha) : "NA") << '\t'
        << (r.exact_min_ratio ? fmt(*r.exact_min_ratio) : "NA") << '\t'
        << (r.full_mms ? (*r.full_mms ? "1" : "0") : "NA") << '\t' << to_cstr(r.oracle) << '\t'
        << fmt(r.wall_ms) << '\n';
  }
}

std::vector<ReportRow> read_report(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  if (!std::getline(in, line) || line.empty()) return rows;
  const auto header = split_tabs(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t c = 0; c < header.size(); ++c) col[header[c]] = c;
  for (const char* name : kColumns) {
    if (!col.contains(name)) throw ParseError(std::string("report lacks column \"") + name + "\"");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_tabs(line);
    if (cells.size() != header.size()) {
      throw ParseError("report line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                       " cells, expected " + std::to_string(header.size()));
    }
    auto at = [&](const char* name) -> const std::string& { return cells[col.at(name)]; };
    ReportRow r;
    try {
      r.id = at("id");
      r.seed = std::stoull(at("seed"));
      r.n = std::stoul(at("n"));
      r.m = std::stoul(at("m"));
      r.ell = std::stoul(at("ell"));
    } catch (const std::logic_error&) {
      throw ParseError("report line " + std::to_string(line_no) + " has a malformed integer");
    }
    r.mode = at("mode") == "bisect" ? SolverMode::kBisect : SolverMode::kFixedHalf;
    r.status = at("status");
    r.achieved_alpha = at("achieved_alpha") == "NA" ? 0.0 : parse_double(at("achieved_alpha"));
    if (at("exact_min_ratio") != "NA") r.exact_min_ratio = parse_double(at("exact_min_ratio"));
    if (at("full_mms") != "NA") r.full_mms = at("full_mms") == "1";
    const std::string& oracle = at("oracle");
    r.oracle = oracle == "ok" ? OracleStatus::kOk : oracle == "budget" ? OracleStatus::kBudget : OracleStatus::kNone;
    r.wall_ms = parse_double(at("wall_ms"));
    rows.push_back(std::move(r));
  }
  return rows;
}

bool has_oracle_data(const std::vector<ReportRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.exact_min_ratio.has_value(); });
}

std::vector<TrendRow> trend(const std::vector<ReportRow>& rows) {
  std::map<std::size_t, std::vector<const ReportRow*>> by_n;
  for (const ReportRow& r : rows) {
    if (r.exact_min_ratio) by_n[r.n].push_back(&r);
  }
  std::vector<TrendRow> out;
  for (const auto& [n, group] : by_n) {
    TrendRow t;
    t.n = n;
    t.count = group.size();
    std::vector<double> ratios;
    double sum = 0.0;
    double alpha_sum = 0.0;
    std::size_t full = 0;
    t.min_alpha = std::numeric_limits<double>::infinity();
    for (const ReportRow* r : group) {
      ratios.push_back(*r->exact_min_ratio);
      sum += std::isinf(*r->exact_min_ratio) ? 1.0 : *r->exact_min_ratio;
      alpha_sum += r->achieved_alpha;
      t.min_alpha = std::min(t.min_alpha, r->achieved_alpha);
      if (r->full_mms.value_or(*r->exact_min_ratio >= 1.0)) ++full;
    }
    const double count = static_cast<double>(group.size());
    t.mean_ratio = sum / count;
    t.median_ratio = median(std::move(ratios));
    t.full_fraction = static_cast<double>(full) / count;
    t.mean_alpha = alpha_sum / count;
    out.push_back(t);
  }
  return out;
}

std::vector<HistogramBin> histogram(const std::vector<ReportRow>& rows) {
  std::vector<HistogramBin> bins;
  bins.push_back({0.0, 0.5});
  for (int b = 5; b < 10; ++b) bins.push_back({b / 10.0, (b + 1) / 10.0});
  bins.push_back({1.0, std::numeric_limits<double>::infinity()});
  std::size_t total = 0;
  for (const ReportRow& r : rows) {
    if (!r.exact_min_ratio) continue;
    ++total;
    const double v = *r.exact_min_ratio;
    if (r.full_mms.value_or(v >= 1.0)) {
      ++bins.back().count;
    } else if (v < 0.5) {
      ++bins.front().count;
    } else {
      // Full-MMS rows are settled above, so anything left is in [0.5, 1).
      const auto b = std::min<std::size_t>(9, static_cast<std::size_t>(std::floor(v * 10.0 + 1e-9)));
      ++bins[b - 4].count;
    }
  }
  if (bins.front().count == 0) bins.erase(bins.begin());
  for (HistogramBin& b : bins) b.fraction = total ? static_cast<double>(b.count) / static_cast<double>(total) : 0.0;
  return bins;
}

void write_trend(std::ostream& out, const std::vector<TrendRow>& rows) {
  if (rows.empty()) return;
  out << "n\tcount\tmean_ratio\tmedian_ratio\tfull_fraction\tmean_alpha\tmin_alpha\n";
  for (const TrendRow& t : rows) {
    out << t.n << '\t' << t.count << '\t' << fmt(t.mean_ratio) << '\t' << fmt(t.median_ratio) << '\t'
        << fmt(t.full_fraction) << '\t' << fmt(t.mean_alpha) << '\t' << fmt(t.min_alpha) << '\n';
  }
}

void write_histogram(std::ostream& out, const std::vector<HistogramBin>& bins) {
  std::size_t total = 0;
  for (const HistogramBin& b : bins) total += b.count;
  if (total == 0) return;
  out << "lo\thi\tcount\tfraction\n";
  for (const HistogramBin& b : bins) {
    out << fmt(b.lo) << '\t' << fmt(b.hi) << '\t' << b.count << '\t' << fmt(b.fraction) << '\n';
  }
}

}  // namespace mms
