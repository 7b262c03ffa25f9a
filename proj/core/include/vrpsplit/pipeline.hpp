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

#ifndef VRPSPLIT_PIPELINE_HPP_
#define VRPSPLIT_PIPELINE_HPP_

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vrpsplit/routing.hpp"

#include "json.hpp"

namespace vrpsplit {

enum class RunMethod { kNaive, kDbd, kAbd };

std::string to_string(RunMethod method);
RunMethod run_method_from_string(const std::string& name);

struct IncumbentEvent {
  double wall_seconds = 0.0;
  double objective = 0.0;
};

struct ConvergencePoint {
  double wall_seconds = 0.0;
  double objective = 0.0;
  // NaN when no best-known objective is available.
  double gap_pct = std::numeric_limits<double>::quiet_NaN();
};

// Everything recorded about one trial; serializes to JSON, one file per
// trial. gap_pct is present only for feasible trials with a known BKS.
struct RunRecord {
  std::string instance_name;
  RunMethod method = RunMethod::kNaive;
  int trial = 0;
  std::uint64_t seed = 0;
  double sa_seconds = 0.0;
  int subproblem_count = 0;
  std::int64_t n_variables_master = 0;
  std::int64_t n_variables_decomposed = 0;
  double vr_rate_pct = 0.0;
  bool fs_flag = false;
  std::optional<double> objective;
  std::optional<double> gap_pct;
  std::vector<ConvergencePoint> incumbents;
  std::vector<int> leaf_sizes;
  std::vector<int> leaf_vehicles;
  int fallback_splits = 0;
  double total_seconds = 0.0;

  nlohmann::ordered_json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

// N = |V| |S| K + |S| K: arc variables plus order variables of the
// mixed-integer formulation.
std::int64_t count_variables(std::int64_t v, std::int64_t s, std::int64_t k);

// Percent reduction of the decomposed variable count vs. the master's.
double vr_rate(std::int64_t n_master, std::int64_t n_decomposed);

// (fs_obj - bks_obj) / bks_obj * 100; negative when a new best is found.
double gap(double fs_obj, double bks_obj);

// Percent of records with a master-feasible solution.
double fs_rate(std::span<const RunRecord> records);

// Merges per-subproblem incumbent streams into one curve: the first point
// sits at the latest first-feasible time with the sum of current bests, and
// every later improvement appends an updated sum. Returns empty when any
// stream produced no incumbent.
std::vector<ConvergencePoint> convergence_curve(
    const std::vector<std::vector<IncumbentEvent>>& streams,
    std::optional<double> bks = std::nullopt);

// Union of routes of locally feasible sub-solutions, without any
// re-optimization across subsets. Refuses (nullopt) if an input is not
// locally feasible.
std::optional<Solution> integrate(
    const std::vector<std::pair<Subproblem, Solution>>& subs);

struct PipelineOptions {
  Budget budget;  // per subproblem for decomposed runs, total for naive
  int jobs = 1;
  bool strict_k = true;  // master feasibility requires route count <= K
  std::optional<double> bks;
  DecomposeOptions dec;  // method and seed are set by the run functions
};

struct RunResult {
  RunRecord record;
  std::optional<Solution> solution;
};

// Single direct solve of the master instance with the routing backend.
RunResult run_naive(const Instance& inst, const Budget& budget,
                    std::uint64_t seed, std::optional<double> bks = std::nullopt,
                    int trial = 0);

// Decompose-solve-integrate: recursive bisection (SA time recorded), the
// subproblems solved on `jobs` workers each under the per-subproblem budget,
// route union validated against the master problem.
RunResult run_decomposed(const Instance& inst, RunMethod method,
                         const PipelineOptions& opts, std::uint64_t seed,
                         int trial = 0);

// Appends "trial,wall_ms,objective,gap_pct" rows for each record.
void write_convergence_csv(std::ostream& out, std::span<const RunRecord> records);

}  // namespace vrpsplit

#endif  // VRPSPLIT_PIPELINE_HPP_
