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

// Corpus runs over generated instances and the TSV reports they produce.
//
// Report columns, tab separated, one header line:
//   id seed n m ell mode status achieved_alpha exact_min_ratio full_mms oracle wall_ms
//
//   mode             fixed-half | bisect
//   status           ok | fail:<reason>
//   achieved_alpha   alpha the solver certified (best_alpha when bisecting)
//   exact_min_ratio  min_i v_i(A_i)/mu_i; "inf" if every mu_i is 0; NA without oracle
//   full_mms         1 if that ratio is at least 1 (decided exactly), 0, or NA
//   oracle           none | ok | budget
//   wall_ms          solver time for the row, excluding the oracle
//
// Floats carry 6 significant digits.

#ifndef MMS_EXPERIMENT_HPP
#define MMS_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mms/exact.hpp"
#include "mms/instance.hpp"

namespace mms {

enum class SolverMode { kFixedHalf, kBisect };
enum class OracleStatus { kNone, kOk, kBudget };

struct BenchConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  SolverMode mode = SolverMode::kFixedHalf;
  bool oracle = false;
  std::uint64_t node_budget = ExactOptions{}.node_budget;
  std::size_t workers = 1;
};

struct ReportRow {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t ell = 0;
  SolverMode mode = SolverMode::kFixedHalf;
  std::string status = "ok";
  double achieved_alpha = 0.0;
  std::optional<double> exact_min_ratio;  // +inf when unbounded
  std::optional<bool> full_mms;
  OracleStatus oracle = OracleStatus::kNone;
  double wall_ms = 0.0;

  [[nodiscard]] bool ok() const { return status == "ok"; }
};

/// Instance `idx` for agent count n uses generator seed `seed + idx`.
/// Rows come back in (n, idx) order whatever the worker count.
std::vector<ReportRow> run_bench(const BenchConfig& config);

/// One row for one instance; exposed for callers that bring their own corpus.
ReportRow bench_instance(const Instance& inst, std::string id, std::uint64_t seed, SolverMode mode,
                         bool oracle, std::uint64_t node_budget);

/// Worker count from MMS_WORKERS, else the hardware concurrency (at least 1).
std::size_t default_workers();

void write_report(std::ostream& out, const std::vector<ReportRow>& rows);
/// Throws ParseError on a malformed report.
std::vector<ReportRow> read_report(std::istream& in);

struct TrendRow {
  std::size_t n = 0;
  std::size_t count = 0;  // rows with an oracle ratio
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double full_fraction = 0.0;
  double mean_alpha = 0.0;
  double min_alpha = 0.0;
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;  // +inf for the last bin
  std::size_t count = 0;
  double fraction = 0.0;
};

/// Per-n aggregates over the oracle-backed rows.
std::vector<TrendRow> trend(const std::vector<ReportRow>& rows);

/// Bins [0.5,0.6) ... [0.9,1.0) and [1,inf) over oracle ratios; ratios below
/// 0.5 land in a leading [0,0.5) bin that is only emitted when nonempty.
std::vector<HistogramBin> histogram(const std::vector<ReportRow>& rows);

void write_trend(std::ostream& out, const std::vector<TrendRow>& rows);
void write_histogram(std::ostream& out, const std::vector<HistogramBin>& bins);

/// True if some row carries an oracle ratio.
bool has_oracle_data(const std::vector<ReportRow>& rows);

}  // namespace mms

#endif  // MMS_EXPERIMENT_HPP
