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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. MMS_WORKERS sets the thread count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mms/exact.hpp"
#include "mms/experiment.hpp"
#include "mms/generator.hpp"
#include "mms/ordered.hpp"
#include "mms/pipeline.hpp"
#include "test_support.hpp"

namespace {

using mms::AgentId;
using mms::Instance;
using mms::Rational;

// Corpus shape.
constexpr std::size_t kGuaranteeCount = 2000;  // per n in [2, 10]
constexpr std::size_t kOracleCount = 500;      // per n in {2, 3}
constexpr std::size_t kStatCount = 2000;       // n = 2
constexpr std::size_t kTransformCount = 1000;
constexpr std::size_t kEquivalenceCount = 200;
constexpr std::uint64_t kCorpusSeed = 1;

// Tolerances.
constexpr double kGuaranteeSeconds = 30.0;
constexpr double kMeanRatio = 0.92;
constexpr double kMeanRatioTol = 0.03;
constexpr double kFullFraction = 0.38;
constexpr double kFullFractionTol = 0.04;
constexpr double kMedianBestAlpha = 0.55;
constexpr double kSolveMedianMs = 10.0;
constexpr double kExactMedianMs = 5000.0;

const Rational kHalf(1, 2);

struct Verdict {
  bool pass = true;
  std::string detail;
};

void report(int id, const char* name, const Verdict& v, int& failures) {
  std::printf("%s criterion %d: %s (%s)\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(count, mms::default_workers());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) body(t);
    });
  }
  for (auto& th : pool) th.join();
}

Instance corpus(std::size_t n, std::size_t idx) { return mms::generate({.n = n, .seed = kCorpusSeed + idx}); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

// Criteria 1 and 5 (proxy part): certified bound at alpha = 1/2.
Verdict guarantee(bool with_invariants, std::size_t& invariant_violations, std::size_t& invariant_checks,
                  double& elapsed) {
  std::atomic<std::size_t> failures{0}, infeasible{0}, short_bound{0}, violations{0}, checks{0};
  const auto start = std::chrono::steady_clock::now();
  parallel_for(9 * kGuaranteeCount, [&](std::size_t t) {
    const std::size_t n = 2 + t / kGuaranteeCount;
    const Instance inst = corpus(n, t % kGuaranteeCount);
    const mms::SolveResult r = mms::solve(inst, kHalf, {.check_invariants = with_invariants});
    if (!r.ok()) {
      ++failures;
      return;
    }
    const mms::Solution& s = r.solution();
    if (!mms::is_feasible(inst, s.allocation)) ++infeasible;
    for (AgentId i = 0; i < n; ++i) {
      if (mms::bundle_value(inst, i, s.allocation.bundles[i]) < kHalf * s.unit[i]) ++short_bound;
    }
    violations += s.invariants.remaining_value;
    checks += s.invariants.checks;
  });
  elapsed = seconds_since(start);
  invariant_violations = violations;
  invariant_checks = checks;
  Verdict v;
  v.pass = failures == 0 && infeasible == 0 && short_bound == 0;
  v.detail = format("%zu instances, %zu failures, %zu infeasible, %zu agents below bound, %.2f s",
                    9 * kGuaranteeCount, failures.load(), infeasible.load(), short_bound.load(), elapsed);
  return v;
}

Verdict oracle_ratios() {
  std::atomic<std::size_t> fixed_low{0}, bisect_low{0}, budget{0};
  std::mutex mu;
  double worst_fixed = 1e9;
  double worst_margin = 1e9;
  parallel_for(2 * kOracleCount, [&](std::size_t t) {
    const std::size_t n = 2 + t / kOracleCount;
    const Instance inst = corpus(n, t % kOracleCount);
    std::vector<Rational> mu_i;
    try {
      mu_i = mms::exact_mms_all(inst);
    } catch (const mms::OracleBudgetExceeded&) {
      ++budget;
      return;
    }
    const mms::SolveResult fixed = mms::solve(inst, kHalf);
    const mms::Proportion p = mms::allocation_proportion(inst, fixed.solution().allocation, mu_i);
    if (!p.unbounded && p.value < kHalf) ++fixed_low;
    const mms::BisectResult b = mms::bisect_alpha(inst);
    const mms::Proportion pb = mms::allocation_proportion(inst, b.solution.allocation, mu_i);
    if (!pb.unbounded && pb.value < b.best_alpha) ++bisect_low;
    std::lock_guard lock(mu);
    if (!p.unbounded) worst_fixed = std::min(worst_fixed, p.to_double());
    if (!pb.unbounded) worst_margin = std::min(worst_margin, (pb.value - b.best_alpha).to_double());
  });
  Verdict v;
  v.pass = fixed_low == 0 && bisect_low == 0 && budget == 0;
  v.detail = format("%zu instances, min ratio %.4f at 1/2, %zu below 1/2, %zu bisection below best_alpha "
                    "(min margin %.4g), %zu oracle budget hits",
                    2 * kOracleCount, worst_fixed, fixed_low.load(), bisect_low.load(), worst_margin,
                    budget.load());
  return v;
}

Verdict example_fixture() {
  const Instance inst = mms::testing::fix_e();
  const mms::ExactResult r = mms::exact_mms(inst, 0);
  Rational low = mms::bundle_value(inst, 0, r.witness.bundles.front());
  for (const auto& b : r.witness.bundles) low = std::min(low, mms::bundle_value(inst, 0, b));
  Verdict v;
  v.pass = r.complete && r.mms == Rational(60) && low == Rational(60) && mms::is_feasible(inst, r.witness);
  v.detail = "mms " + r.mms.str() + ", witness min bundle " + low.str();
  return v;
}

Verdict statistics() {
  std::vector<double> ratio(kStatCount, 0.0);
  std::vector<char> full(kStatCount, 0);
  std::atomic<std::size_t> budget{0};
  parallel_for(kStatCount, [&](std::size_t t) {
    const mms::ReportRow row = mms::bench_instance(corpus(2, t), "", kCorpusSeed + t, mms::SolverMode::kFixedHalf,
                                                   true, mms::ExactOptions{}.node_budget);
    if (!row.exact_min_ratio) {
      ++budget;
      return;
    }
    ratio[t] = std::isinf(*row.exact_min_ratio) ? 1.0 : *row.exact_min_ratio;
    full[t] = row.full_mms.value_or(false);
  });
  const double mean = std::accumulate(ratio.begin(), ratio.end(), 0.0) / kStatCount;
  const double frac = static_cast<double>(std::count(full.begin(), full.end(), 1)) / kStatCount;
  Verdict v;
  v.pass = budget == 0 && std::abs(mean - kMeanRatio) <= kMeanRatioTol &&
           std::abs(frac - kFullFraction) <= kFullFractionTol;
  v.detail = format("n=2, %zu instances: mean ratio %.4f (target %.2f +- %.2f), full-MMS fraction %.4f "
                    "(target %.2f +- %.2f)",
                    kStatCount, mean, kMeanRatio, kMeanRatioTol, frac, kFullFraction, kFullFractionTol);
  return v;
}

Verdict bisection_corpus(const Verdict& proxy) {
  std::vector<double> best(9 * kGuaranteeCount, 0.0);
  const auto start = std::chrono::steady_clock::now();
  parallel_for(best.size(), [&](std::size_t t) {
    const std::size_t n = 2 + t / kGuaranteeCount;
    best[t] = mms::bisect_alpha(corpus(n, t % kGuaranteeCount)).best_alpha.to_double();
  });
  const double med = median(best);
  Verdict v;
  v.pass = proxy.pass && med >= kMedianBestAlpha;
  v.detail = format("proxy bound %s; best_alpha median %.4f over %zu instances (min %.4f), %.1f s",
                    proxy.pass ? "holds" : "VIOLATED", med, best.size(), *std::min_element(best.begin(), best.end()),
                    seconds_since(start));
  return v;
}

Verdict quarter_values() {
  Verdict v;
  std::string list;
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t m = 4 * n;
    std::vector<mms::ItemId> items(m);
    std::iota(items.begin(), items.end(), mms::ItemId{0});
    const Instance equal(n, m, std::vector<Rational>(n * m, Rational(1)), {{items, 4}});
    // Same shape split over two categories with different values per agent.
    std::vector<Rational> values;
    for (AgentId i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) values.emplace_back(static_cast<std::int64_t>(i + 1));
    }
    std::vector<mms::ItemId> first(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(2 * n));
    std::vector<mms::ItemId> second(items.begin() + static_cast<std::ptrdiff_t>(2 * n), items.end());
    const Instance split(n, m, values, {{first, 2}, {second, 2}});
    for (const Instance* inst : {&equal, &split}) {
      const Rational best = mms::bisect_alpha(*inst).best_alpha;
      if (best < Rational(3, 4)) v.pass = false;
      if (inst == &equal) list += (list.empty() ? "" : " ") + format("%.4f", best.to_double());
    }
  }
  v.detail = "best_alpha for n=2..10: " + list;
  return v;
}

// A uniformly random feasible allocation of `inst`.
mms::Allocation random_allocation(const Instance& inst, std::mt19937_64& rng) {
  mms::Allocation a;
  a.bundles.resize(inst.agents());
  for (const mms::Category& c : inst.categories()) {
    std::vector<std::size_t> room(inst.agents(), c.k);
    for (const mms::ItemId item : c.items) {
      std::vector<AgentId> open;
      for (AgentId i = 0; i < inst.agents(); ++i) {
        if (room[i] > 0) open.push_back(i);
      }
      const AgentId pick = open[mms::uniform_int(rng, 0, open.size() - 1)];
      --room[pick];
      a.bundles[pick].push_back(item);
    }
  }
  return a;
}

Verdict transforms() {
  std::atomic<std::size_t> bad_recover{0}, bad_mms{0}, budget{0}, compared{0};
  parallel_for(kTransformCount, [&](std::size_t t) {
    std::mt19937_64 rng(mms::splitmix64(t));
    const Instance inst = mms::generate({.n = 2 + t % 9, .seed = 900000 + t});
    const mms::OrderedInstance ord = mms::to_ordered(inst);
    for (int rep = 0; rep < 5; ++rep) {
      const mms::Allocation a = random_allocation(ord.instance, rng);
      const mms::Allocation back = mms::recover(ord, a);
      bool ok = mms::is_feasible(inst, back);
      for (AgentId i = 0; ok && i < inst.agents(); ++i) {
        ok = mms::bundle_value(inst, i, back.bundles[i]) >= mms::bundle_value(ord.instance, i, a.bundles[i]);
      }
      if (!ok) ++bad_recover;
    }
    const Instance small = mms::generate({.n = 2 + t % 2, .seed = 800000 + t});
    const Instance small_ord = mms::to_ordered(small).instance;
    for (AgentId i = 0; i < small.agents(); ++i) {
      const mms::ExactResult x = mms::exact_mms(small, i);
      const mms::ExactResult y = mms::exact_mms(small_ord, i);
      if (!x.complete || !y.complete) {
        ++budget;
        continue;
      }
      ++compared;
      if (x.mms != y.mms) ++bad_mms;
    }
  });
  Verdict v;
  v.pass = bad_recover == 0 && bad_mms == 0 && budget == 0;
  v.detail = format("%zu instances x 5 allocations: %zu recover violations; %zu agent shares compared at "
                    "n in {2,3}: %zu mismatches, %zu budget hits",
                    kTransformCount, bad_recover.load(), compared.load(), bad_mms.load(), budget.load());
  return v;
}

Verdict oracle_equivalence() {
  std::atomic<std::size_t> mismatches{0}, instances{0};
  parallel_for(kEquivalenceCount, [&](std::size_t t) {
    const Instance inst = mms::generate({.n = 2, .seed = 700000 + t});
    if (inst.items() > 8) return;
    ++instances;
    for (AgentId i = 0; i < 2; ++i) {
      if (mms::exact_mms(inst, i).mms != mms::testing::naive_mms(inst, i)) ++mismatches;
    }
  });
  Verdict v;
  v.pass = mismatches == 0 && instances == kEquivalenceCount;
  v.detail = format("%zu instances with m <= 8, %zu mismatches", instances.load(), mismatches.load());
  return v;
}

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return seconds_since(start) * 1000.0;
}

Verdict performance() {
  std::vector<double> solve_ms;
  for (std::uint64_t s = 0; s < 101; ++s) {
    const Instance inst = mms::generate({.n = 10, .seed = 500000 + s, .m_min = 40, .m_max = 40});
    solve_ms.push_back(time_ms([&] { (void)mms::solve(inst, kHalf); }));
  }
  std::vector<double> exact_ms;
  for (std::uint64_t s = 0; s < 21; ++s) {
    const Instance inst = mms::generate({.n = 3, .seed = 600000 + s, .m_min = 12, .m_max = 12});
    exact_ms.push_back(time_ms([&] { (void)mms::exact_mms(inst, 0); }));
  }
  const double a = median(solve_ms);
  const double b = median(exact_ms);
  Verdict v;
  v.pass = a < kSolveMedianMs && b < kExactMedianMs;
  v.detail = format("solve n=10 m=40 median %.3f ms (limit %.0f); exact_mms n=3 m=12 median %.3f ms (limit %.0f)",
                    a, kSolveMedianMs, b, kExactMedianMs);
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  std::size_t unused_violations = 0;
  std::size_t unused_checks = 0;
  double guarantee_seconds = 0;
  Verdict c1 = guarantee(false, unused_violations, unused_checks, guarantee_seconds);
  const Verdict proxy = c1;
  if (guarantee_seconds >= kGuaranteeSeconds) {
    c1.pass = false;
    c1.detail += format(", over the %.0f s budget", kGuaranteeSeconds);
  }
  report(1, "alpha = 1/2 guarantee over the generated corpus", c1, failures);
  report(2, "exact ratio at least 1/2 and at least best_alpha, n = 2 and 3", oracle_ratios(), failures);
  report(3, "worked example maximin share", example_fixture(), failures);
  report(4, "n = 2 ratio statistics", statistics(), failures);
  report(5, "proxy bound and bisection median over n = 2..10", bisection_corpus(proxy), failures);
  report(6, "quarter-value instances reach 3/4", quarter_values(), failures);

  std::size_t violations = 0;
  std::size_t checks = 0;
  double seconds = 0;
  const Verdict with_checks = guarantee(true, violations, checks, seconds);
  Verdict c7;
  c7.pass = with_checks.pass && violations == 0 && checks > 0;
  c7.detail = format("%zu bag hand-outs checked, %zu remaining-value violations", checks, violations);
  report(7, "remaining agents keep enough value during bag filling", c7, failures);

  report(8, "ordering transform properties", transforms(), failures);
  report(9, "branch-and-bound equals naive enumeration", oracle_equivalence(), failures);
  report(10, "performance", performance(), failures);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
