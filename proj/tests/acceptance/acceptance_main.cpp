// Copyright 2026 The vrpsplit Authors
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

// Acceptance suite: ten go/no-go checks of the whole toolkit, printed one
// line per criterion. Run with no arguments for all criteria or pass ids
// (e.g. "acceptance_tests 2 5") for a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "test_support.hpp"
#include "vrpsplit/decomposer.hpp"
#include "vrpsplit/pipeline.hpp"

using namespace vrpsplit;
namespace ts = vrpsplit::testsupport;

namespace {

std::filesystem::path data_file(const std::string& rel) {
  return std::filesystem::path(VRPSPLIT_DATA_DIR) / rel;
}

const std::vector<std::string> kInstanceNames = {
    "M-n151-k12", "M-n200-k17", "X-n101-k25",
    "X-n200-k36", "X-n261-k13", "X-n401-k29"};

Instance load_bundled(const std::string& name) {
  return Instance::load(data_file("instances/" + name + ".vrp"));
}

// --------------------------------------------------------------------------
// 1. Variable-count golden values.
// --------------------------------------------------------------------------
bool criterion_1() {
  const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t,
                               std::int64_t>>
      golden = {{151, 150, 12, 273600},
                {200, 199, 17, 679983},
                {200, 199, 36, 1439964},
                {261, 260, 13, 885560},
                {401, 400, 29, 4663200}};
  bool ok = true;
  for (auto [v, s, k, expected] : golden) {
    auto got = count_variables(v, s, k);
    if (got != expected) {
      std::printf("    (%lld,%lld,%lld) -> %lld, expected %lld\n",
                  static_cast<long long>(v), static_cast<long long>(s),
                  static_cast<long long>(k), static_cast<long long>(got),
                  static_cast<long long>(expected));
      ok = false;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 2. Capacity-utilization golden values on the bundled instances.
// --------------------------------------------------------------------------
bool criterion_2() {
  const std::map<std::string, double> golden = {
      {"M-n151-k12", 0.9313}, {"M-n200-k17", 0.9371}, {"X-n101-k25", 0.9994},
      {"X-n200-k36", 0.9856}, {"X-n261-k13", 0.9522}, {"X-n401-k29", 0.9847}};
  bool ok = true;
  for (const auto& [name, expected] : golden) {
    double got = load_bundled(name).cur();
    if (std::abs(got - expected) > 1e-4) {
      std::printf("    %s: CUR %.6f vs expected %.4f\n", name.c_str(), got,
                  expected);
      ok = false;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 3. Annealer optimality on desk-scale constrained max-cut models.
// --------------------------------------------------------------------------
bool criterion_3() {
  std::mt19937_64 rng(20260810);
  int hits = 0;
  const int total = 100;
  for (int rep = 0; rep < total; ++rep) {
    const int n = 8 + static_cast<int>(rng() % 9);  // 8..16
    auto inst = ts::random_instance(rng, n, 60, 2 + static_cast<int>(rng() % 3),
                                    100.0, 10);
    CmcSpec spec;
    spec.method = rep % 2 == 0 ? CmcMethod::kDbd : CmcMethod::kAbd;
    for (int c = 1; c <= n; ++c) spec.subset.push_back(c);
    spec.alpha = alpha_for(2 + static_cast<int>(rng() % 3));
    const int step_index = static_cast<int>(rng() % 11);
    spec.mu = (spec.method == CmcMethod::kDbd ? 1.0 : 0.001) * step_index;
    QuboModel model = build_cmc(spec, inst);

    AnnealParams params;  // spec defaults: 1000 sweeps, 100 restarts
    params.seed = 7000 + rep;
    params.threads = 2;
    auto sa = best_of_restarts(model, params);
    auto brute = ts::brute_force_minimum(model);
    if (sa.best_energy < brute.min_energy - 1e-9) {
      std::printf("    rep %d: annealer below exhaustive minimum?!\n", rep);
      return false;
    }
    const double tol = 1e-6 * std::max(1.0, std::abs(brute.min_energy));
    if (sa.best_energy <= brute.min_energy + tol) ++hits;
  }
  std::printf("    optimum attained in %d/%d runs (need >= 95)\n", hits, total);
  return hits >= 95;
}

// --------------------------------------------------------------------------
// 4. QUBO <-> Ising equivalence on random models.
// --------------------------------------------------------------------------
bool criterion_4() {
  std::mt19937_64 rng(4043);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 9);  // 2..10
    QuboModel model = ts::random_qubo(rng, n);
    IsingModel ising = to_ising(model);
    std::vector<std::uint8_t> x(n);
    std::vector<std::int8_t> s(n);
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      for (int i = 0; i < n; ++i) {
        x[i] = (v >> i) & 1u;
        s[i] = x[i] ? 1 : -1;
      }
      double eq = model.energy(x), ei = ising.energy(s);
      if (std::abs(eq - ei) > 1e-9 * std::max(1.0, std::abs(eq))) {
        std::printf("    rep %d assignment %llu: %.12g vs %.12g\n", rep,
                    static_cast<unsigned long long>(v), eq, ei);
        return false;
      }
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// 5. Decomposition structure on every bundled instance.
// --------------------------------------------------------------------------
bool criterion_5() {
  bool ok = true;
  for (const auto& name : kInstanceNames) {
    Instance inst = load_bundled(name);
    for (auto method : {CmcMethod::kDbd, CmcMethod::kAbd}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        DecomposeOptions opts;
        opts.method = method;
        opts.max_variables = 100;
        opts.seed = seed;
        // Structure is independent of annealing effort; keep it light so the
        // whole sweep stays within the time box.
        opts.anneal.sweeps = 120;
        opts.anneal.restarts = 8;
        opts.anneal.threads = 2;
        opts.mu_schedule = MuSchedule{0.0, 30, false};
        opts.mu_schedule->step = default_mu_schedule(method).step;

        Decomposition dec = decompose(inst, opts);
        std::set<int> seen;
        size_t total = 0;
        bool bounds_ok = true;
        for (const auto* leaf : dec.leaves()) {
          bounds_ok &= static_cast<int>(leaf->subset.size()) <= 100;
          bounds_ok &= !leaf->subset.empty();
          total += leaf->subset.size();
          seen.insert(leaf->subset.begin(), leaf->subset.end());
        }
        const bool partition_ok =
            total == seen.size() &&
            static_cast<int>(seen.size()) == inst.num_customers() &&
            (seen.empty() || (*seen.begin() == 1 &&
                              *seen.rbegin() == inst.num_customers()));
        Decomposition again = decompose(inst, opts);
        const bool deterministic =
            dec.to_json().dump() == again.to_json().dump();
        if (!bounds_ok || !partition_ok || !deterministic) {
          std::printf("    %s %s seed %llu: bounds=%d partition=%d "
                      "deterministic=%d\n",
                      name.c_str(), method == CmcMethod::kDbd ? "dbd" : "abd",
                      static_cast<unsigned long long>(seed), bounds_ok,
                      partition_ok, deterministic);
          ok = false;
        }
      }
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 6. Variable-reduction rates within +-5 points of the reference values.
// --------------------------------------------------------------------------
bool criterion_6() {
  struct Target {
    const char* instance;
    CmcMethod method;
    double vr_reference;
  };
  const std::vector<Target> targets = {
      {"M-n151-k12", CmcMethod::kDbd, 74.67},
      {"M-n151-k12", CmcMethod::kAbd, 74.65},
      {"X-n261-k13", CmcMethod::kDbd, 93.51},
      {"X-n261-k13", CmcMethod::kAbd, 93.41},
  };
  bool ok = true;
  for (const auto& target : targets) {
    Instance inst = load_bundled(target.instance);
    const std::int64_t n_master = count_variables(
        inst.num_vertices(), inst.num_customers(), inst.vehicles());
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      DecomposeOptions opts;
      opts.method = target.method;
      opts.max_variables = 100;
      opts.seed = seed;
      opts.anneal.threads = 2;  // spec-default sweeps and restarts
      Decomposition dec = decompose(inst, opts);
      std::int64_t n_dec = 0;
      for (const auto& sub : make_subproblems(*dec.root, inst)) {
        auto s = static_cast<std::int64_t>(sub.subset.size());
        n_dec += count_variables(s + 1, s, sub.vehicles);
      }
      const double vr = vr_rate(n_master, n_dec);
      const double err = vr - target.vr_reference;
      std::printf("    %s %s seed %llu: VR %.2f%% (reference %.2f%%, "
                  "delta %+.2f)\n",
                  target.instance,
                  target.method == CmcMethod::kDbd ? "dbd" : "abd",
                  static_cast<unsigned long long>(seed), vr,
                  target.vr_reference, err);
      if (std::abs(err) > 5.0) ok = false;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 7. Heuristic routing matches the exact oracle on tiny instances.
// --------------------------------------------------------------------------
bool criterion_7() {
  std::mt19937_64 rng(777);
  int equal = 0, total = 0;
  while (total < 100) {
    const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    auto inst = ts::random_instance(rng, n, 30,
                                    2 + static_cast<int>(rng() % 2), 90.0, 9);
    Subproblem sub;
    for (int c = 1; c <= n; ++c) sub.subset.push_back(c);
    sub.vehicles = vehicles_for(sub.subset, inst);
    sub.master = &inst;
    auto exact = solve_exact(sub);
    if (!exact) continue;  // no capacity-feasible assignment; not a trial
    ++total;
    auto heur = solve_heuristic(sub, Budget::of_rounds(250), 4000 + total);
    if (!heur || !heur->feasible_local) continue;
    if (heur->objective < exact->objective - 1e-9) {
      std::printf("    heuristic %.6f beats exact %.6f?!\n", heur->objective,
                  exact->objective);
      return false;
    }
    if (heur->objective <= exact->objective + 1e-9) ++equal;
  }
  std::printf("    optimum matched in %d/%d runs (need >= 90)\n", equal, total);
  return equal >= 90;
}

// --------------------------------------------------------------------------
// 8. End-to-end feasibility: angular decomposition, 60 s per subproblem,
//    10 trials, strict master vehicle limit, >= 8/10 feasible.
// --------------------------------------------------------------------------
bool criterion_8() {
  bool ok = true;
  for (const std::string name : {"M-n151-k12", "X-n261-k13"}) {
    Instance inst = load_bundled(name);
    PipelineOptions opts;
    opts.budget = Budget::of_seconds(60.0);
    opts.jobs = 2;
    opts.strict_k = true;
    opts.bks = static_cast<double>(load_bks(name).bks_objective);
    opts.dec.anneal.threads = 2;
    int feasible = 0;
    for (int trial = 0; trial < 10; ++trial) {
      auto result = run_decomposed(inst, RunMethod::kAbd, opts,
                                   1000 + static_cast<std::uint64_t>(trial),
                                   trial);
      feasible += result.record.fs_flag ? 1 : 0;
      std::printf("    %s trial %d: fs=%s objective=%s gap=%s sa=%.2fs "
                  "leaves=%d\n",
                  name.c_str(), trial, result.record.fs_flag ? "yes" : "no",
                  result.record.objective
                      ? std::to_string(*result.record.objective).c_str()
                      : "-",
                  result.record.gap_pct
                      ? (std::to_string(*result.record.gap_pct) + "%").c_str()
                      : "-",
                  result.record.sa_seconds, result.record.subproblem_count);
      std::fflush(stdout);
    }
    std::printf("    %s: %d/10 master-feasible (need >= 8)\n", name.c_str(),
                feasible);
    if (feasible < 8) ok = false;
  }
  return ok;
}

// --------------------------------------------------------------------------
// 9. Convergence-curve construction rule.
// --------------------------------------------------------------------------
bool criterion_9() {
  bool ok = true;
  {
    std::vector<std::vector<IncumbentEvent>> streams{{{10.0, 120.0}},
                                                     {{12.0, 95.0}}};
    auto curve = convergence_curve(streams);
    ok &= curve.size() == 1 && curve[0].wall_seconds == 12.0 &&
          curve[0].objective == 215.0;
    streams[0].push_back({20.0, 110.0});
    curve = convergence_curve(streams);
    ok &= curve.size() == 2 && curve[1].wall_seconds == 20.0 &&
          curve[1].objective == 205.0;
    if (!ok) std::printf("    two-stream example mismatch\n");
  }
  {
    std::vector<std::vector<IncumbentEvent>> single{
        {{1.0, 9.0}, {4.0, 7.5}, {6.0, 2.0}}};
    auto curve = convergence_curve(single);
    bool same = curve.size() == 3;
    for (size_t i = 0; same && i < curve.size(); ++i)
      same = curve[i].wall_seconds == single[0][i].wall_seconds &&
             curve[i].objective == single[0][i].objective;
    if (!same) std::printf("    single-stream identity mismatch\n");
    ok &= same;
    ok &= convergence_curve({{{1.0, 5.0}}, {}}).empty();
  }
  {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<std::vector<IncumbentEvent>> streams(1 + rng() % 5);
      for (auto& s : streams) {
        double t = 0.0, obj = 900.0;
        const int events = 1 + static_cast<int>(rng() % 7);
        for (int e = 0; e < events; ++e) {
          t += 0.25 + static_cast<double>(rng() % 8);
          obj -= 1.0 + static_cast<double>(rng() % 30);
          s.push_back({t, obj});
        }
      }
      auto curve = convergence_curve(streams);
      double t0 = 0.0;
      for (const auto& s : streams) t0 = std::max(t0, s.front().wall_seconds);
      if (curve.empty() || curve.front().wall_seconds != t0) {
        std::printf("    random streams: wrong first-point time\n");
        return false;
      }
      for (size_t i = 1; i < curve.size(); ++i)
        if (curve[i].objective > curve[i - 1].objective + 1e-12 ||
            curve[i].wall_seconds < curve[i - 1].wall_seconds) {
          std::printf("    random streams: curve not monotone\n");
          return false;
        }
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 10. Gap arithmetic, including the inverse check against the reference
//     decomposition row for M-n151-k12.
// --------------------------------------------------------------------------
bool criterion_10() {
  bool ok = true;
  ok &= gap(1000.0, 1000.0) == 0.0;
  ok &= std::abs(gap(1100.0, 1000.0) - 10.0) < 1e-12;
  ok &= std::abs(gap(1053.0 * 1.0347, 1053.0) - 3.47) <= 0.01;
  ok &= gap(900.0, 1000.0) < 0.0;
  try {
    gap(1.0, 0.0);
    ok = false;
  } catch (const std::invalid_argument&) {
  }
  if (!ok) std::printf("    gap arithmetic mismatch\n");
  return ok;
}

struct Criterion {
  int id;
  const char* summary;
  bool (*run)();
};

const std::vector<Criterion> kCriteria = {
    {1, "variable-count golden values (exact)", criterion_1},
    {2, "capacity-utilization golden values (+-0.0001)", criterion_2},
    {3, "annealer optimality on 8-16 var cut models (>=95/100)", criterion_3},
    {4, "qubo/ising energy equivalence (1e-9)", criterion_4},
    {5, "decomposition partitions, bounds, determinism (5 seeds)", criterion_5},
    {6, "variable-reduction rate within +-5 points", criterion_6},
    {7, "heuristic routing matches exact optimum (>=90/100)", criterion_7},
    {8, "end-to-end feasibility, 60 s budget, >=8/10 trials", criterion_8},
    {9, "convergence-curve construction rule", criterion_9},
    {10, "gap formula incl. 3.47% inverse check", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--list") == 0) {
      for (const auto& c : kCriteria)
        std::printf("%2d  %s\n", c.id, c.summary);
      return 0;
    }
    selected.insert(std::atoi(argv[a]));
  }

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    const bool pass = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL",
                c.id, c.summary, secs);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
