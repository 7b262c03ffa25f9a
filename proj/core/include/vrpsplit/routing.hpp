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

#ifndef VRPSPLIT_ROUTING_HPP_
#define VRPSPLIT_ROUTING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vrpsplit/decomposer.hpp"
#include "vrpsplit/instance.hpp"

namespace vrpsplit {

// Depot-anchored vehicle tour; the depot is implicit at both ends, so the
// representation is subtour-free by construction.
struct Route {
  std::vector<int> customers;
  std::int64_t load = 0;
};

enum class SolutionSource { kHeuristic, kExact, kIntegrated };

struct Solution {
  std::vector<Route> routes;
  double objective = 0.0;
  bool feasible_local = false;
  SolutionSource source = SolutionSource::kHeuristic;
};

struct FeasibilityReport {
  int visit_violations = 0;     // missed, duplicated, or foreign customers
  int capacity_violations = 0;  // routes whose load exceeds Q
  int vehicle_count_excess = 0; // routes beyond the vehicle limit
  bool subtour_free = true;     // always true for depot-anchored routes

  bool ok() const {
    return visit_violations == 0 && capacity_violations == 0 &&
           vehicle_count_excess == 0 && subtour_free;
  }
  std::string describe() const;
};

// Checks a solution against a customer set and vehicle limit: every listed
// customer served exactly once, no foreign customers, loads within Q,
// route count within k_limit. Violations are reported, never thrown.
FeasibilityReport validate(const Solution& sol, std::span<const int> customers,
                           int k_limit, const Instance& inst);

// Depot -> customers... -> depot travel cost under the instance's mode.
double route_cost(const Route& route, const Instance& inst);

double solution_cost(const Solution& sol, const Instance& inst);

// Improvement budget: wall-clock seconds, improvement rounds, or both
// (whichever ends first). Rounds-only budgets give deterministic runs.
struct Budget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> rounds;

  static Budget of_seconds(double s) { return {s, std::nullopt}; }
  static Budget of_rounds(std::uint64_t r) { return {std::nullopt, r}; }
};

// Fired on every strict improvement of the best-known objective, including
// the initial constructed solution; elapsed is measured from solve start.
using IncumbentCallback =
    std::function<void(double objective, double elapsed_seconds)>;

// Anytime heuristic: parallel-savings construction constrained to the
// subproblem's vehicle count (demand-sorted first-fit packing as fallback),
// then first-improvement local search (intra-route 2-opt, inter-route
// relocate and swap) restarted from seeded perturbations until the budget
// expires. Returns nullopt when no feasible construction exists (demand
// exceeding fleet capacity, or packing failure).
std::optional<Solution> solve_heuristic(const Subproblem& sub,
                                        const Budget& budget,
                                        std::uint64_t seed,
                                        const IncumbentCallback& on_incumbent = {});

// Provably optimal solver for tiny subproblems (|subset| <= 10): enumerates
// customer-to-vehicle partitions with optimal per-route orderings from a
// Held-Karp table. Returns nullopt when no feasible assignment exists.
std::optional<Solution> solve_exact(const Subproblem& sub);

// Full mixed-integer formulation in LP text format: binary arc variables
// x_i_j_k, continuous order variables u_i_k with Miller-Tucker-Zemlin rows,
// degree/flow/capacity constraints, and the travel-cost objective.
std::string emit_milp(const Subproblem& sub);

// "Route #k: ..." lines plus a final "Cost" line.
std::string to_solution_text(const Solution& sol);

// Parses solution text; loads and the objective are recomputed from the
// instance. When `declared_cost` is non-null it receives the file's Cost
// value (NaN if absent).
Solution parse_solution_text(std::string_view text, const Instance& inst,
                             double* declared_cost = nullptr);

}  // namespace vrpsplit

#endif  // VRPSPLIT_ROUTING_HPP_
