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

// mms: solve, generate and benchmark cardinality-constrained MMS instances.
//
// Exit codes: 0 success, 1 solver failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mms/experiment.hpp"
#include "mms/generator.hpp"
#include "mms/io.hpp"
#include "mms/pipeline.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSolverFailure = 1;
constexpr int kInputError = 2;

struct SolveArgs {
  std::string instance;
  std::string alpha = "1/2";
  bool bisect = false;
  std::string lo = "1/2";
  std::string hi = "2";
  std::size_t iters = 40;
  std::string out;
};

struct GenArgs {
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string dir = ".";
};

struct BenchArgs {
  std::string n_range = "2";
  std::size_t count = 100;
  std::uint64_t seed = 1;
  bool oracle = false;
  bool bisect = false;
  std::uint64_t budget = mms::ExactOptions{}.node_budget;
  std::string out;
};

struct ReportArgs {
  std::string report;
  bool histogram = false;
  bool trend = false;
  std::string out;
};

// Writes to `path`, or stdout when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  write(file);
}

int cmd_solve(const SolveArgs& args) {
  mms::Instance inst;
  mms::Rational alpha;
  try {
    inst = mms::load_instance(args.instance);
    alpha = mms::Rational::parse(args.alpha);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (const auto violations = mms::validate_instance(inst); !violations.empty()) {
    std::cerr << "error: invalid instance\n";
    for (const auto& v : violations) std::cerr << "  " << v << '\n';
    return kInputError;
  }

  mms::Solution solution;
  if (args.bisect) {
    mms::BisectResult r;
    try {
      r = mms::bisect_alpha(inst, mms::Rational::parse(args.lo), mms::Rational::parse(args.hi), args.iters);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kInputError;
    } catch (const std::runtime_error& e) {
      std::cerr << "solver failure: " << e.what() << '\n';
      return kSolverFailure;
    }
    std::cerr << "bisection: " << r.iterations << " probes, bracket [" << r.bracket_lo.to_double() << ", "
              << r.bracket_hi.to_double() << "]\n";
    solution = std::move(r.solution);
  } else {
    mms::SolveResult r = mms::solve(inst, alpha);
    if (!r.ok()) {
      std::cerr << "solver failure: " << mms::to_string(r.failure()) << " at alpha " << alpha << '\n';
      return kSolverFailure;
    }
    solution = std::move(r.solution());
  }

  // The summary goes to stderr when the allocation itself goes to stdout.
  std::ostream& summary = args.out.empty() ? std::cerr : std::cout;
  for (mms::AgentId i = 0; i < inst.agents(); ++i) {
    summary << "agent " << i << ": value " << solution.per_agent_value[i] << " ("
            << solution.per_agent_value[i].to_double() << "), bound unit " << solution.unit[i] << '\n';
  }
  summary << "achieved_alpha " << solution.achieved_alpha << " (" << solution.achieved_alpha.to_double()
          << ")\n";
  emit(args.out, [&](std::ostream& os) {
    os << mms::format_allocation({solution.allocation, solution.achieved_alpha});
  });
  return kOk;
}

int cmd_gen(const GenArgs& args) {
  if (args.n < 2) {
    std::cerr << "error: the generator needs n >= 2\n";
    return kInputError;
  }
  std::filesystem::create_directories(args.dir);
  for (std::size_t i = 0; i < args.count; ++i) {
    const std::uint64_t seed = args.seed + i;
    const mms::Instance inst = mms::generate({.n = args.n, .seed = seed});
    const auto path = std::filesystem::path(args.dir) /
                      ("inst-n" + std::to_string(args.n) + "-s" + std::to_string(seed) + ".json");
    mms::save_instance(path, inst);
    std::cout << path.string() << '\n';
  }
  return kOk;
}

bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      lo = std::stoul(text.substr(0, dots));
      hi = std::stoul(text.substr(dots + 2));
    } else {
      lo = hi = std::stoul(text);
    }
  } catch (const std::logic_error&) {
    return false;
  }
  return lo >= 2 && lo <= hi;
}

int cmd_bench(const BenchArgs& args) {
  mms::BenchConfig config;
  if (!parse_range(args.n_range, config.n_min, config.n_max)) {
    std::cerr << "error: --n expects N or LO..HI with 2 <= LO <= HI\n";
    return kInputError;
  }
  config.count = args.count;
  config.seed = args.seed;
  config.mode = args.bisect ? mms::SolverMode::kBisect : mms::SolverMode::kFixedHalf;
  config.oracle = args.oracle;
  config.node_budget = args.budget;
  config.workers = mms::default_workers();

  const auto rows = mms::run_bench(config);
  emit(args.out, [&](std::ostream& os) { mms::write_report(os, rows); });

  std::size_t failures = 0;
  for (const auto& r : rows) failures += r.ok() ? 0 : 1;
  std::ostringstream agg;
  mms::write_trend(agg, mms::trend(rows));
  std::cerr << rows.size() << " instances, " << failures << " solver failures\n" << agg.str();
  return failures ? kSolverFailure : kOk;
}

int cmd_report(const ReportArgs& args) {
  if (args.histogram == args.trend) {
    std::cerr << "error: pass exactly one of --histogram or --trend\n";
    return kInputError;
  }
  std::vector<mms::ReportRow> rows;
  try {
    std::ifstream in(args.report);
    if (!in) throw mms::ParseError("cannot open " + args.report);
    rows = mms::read_report(in);
  } catch (const mms::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!rows.empty() && !mms::has_oracle_data(rows)) {
    std::cerr << "error: report has no oracle ratios (run bench with --oracle)\n";
    return kInputError;
  }
  emit(args.out, [&](std::ostream& os) {
    if (args.histogram) {
      mms::write_histogram(os, mms::histogram(rows));
    } else {
      mms::write_trend(os, mms::trend(rows));
    }
  });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximin-share allocation under cardinality constraints"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance file and write the allocation");
  solve->add_option("instance", solve_args.instance, "Instance JSON file")->required();
  auto* alpha_opt = solve->add_option("--alpha", solve_args.alpha, "Target alpha, e.g. 1/2 or 0.5");
  auto* bisect_flag = solve->add_flag("--bisect", solve_args.bisect, "Search for the largest feasible alpha");
  alpha_opt->excludes(bisect_flag);
  solve->add_option("--lo", solve_args.lo, "Bisection lower end")->needs(bisect_flag);
  solve->add_option("--hi", solve_args.hi, "Bisection upper end")->needs(bisect_flag);
  solve->add_option("--iters", solve_args.iters, "Bisection rounds")->needs(bisect_flag);
  solve->add_option("-o,--out", solve_args.out, "Allocation output file (default: stdout)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate random instances");
  gen->add_option("n", gen_args.n, "Agent count")->required();
  gen->add_option("count", gen_args.count, "Number of instances")->required();
  gen->add_option("seed", gen_args.seed, "First seed; instance i uses seed + i")->required();
  gen->add_option("-d,--dir", gen_args.dir, "Output directory");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the solver over a generated corpus");
  bench->add_option("--n", bench_args.n_range, "Agent count N or range LO..HI");
  bench->add_option("--count", bench_args.count, "Instances per agent count");
  bench->add_option("--seed", bench_args.seed, "First seed");
  bench->add_flag("--oracle", bench_args.oracle, "Score allocations against exact maximin shares");
  bench->add_flag("--bisect", bench_args.bisect, "Use the bisection optimizer instead of alpha = 1/2");
  bench->add_option("--budget", bench_args.budget, "Oracle node budget per agent");
  bench->add_option("-o,--out", bench_args.out, "Report TSV (default: stdout)");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Turn a bench report into figure data");
  report->add_option("report", report_args.report, "Report TSV from bench --oracle")->required();
  report->add_flag("--histogram", report_args.histogram, "Histogram of ratios");
  report->add_flag("--trend", report_args.trend, "Mean ratio per n");
  report->add_option("-o,--out", report_args.out, "Output TSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*gen) return cmd_gen(gen_args);
    if (*bench) return cmd_bench(bench_args);
    if (*report) return cmd_report(report_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
