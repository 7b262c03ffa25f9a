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

#ifndef VRPSPLIT_DECOMPOSER_HPP_
#define VRPSPLIT_DECOMPOSER_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vrpsplit/mu_tuning.hpp"

#include "json.hpp"

namespace vrpsplit {

// Node of the recursive bisection tree. Children, when present, are two
// disjoint non-empty subsets covering the parent; leaves satisfy
// |subset| <= max_variables.
struct PartitionNode {
  std::vector<int> subset;  // sorted customer ids
  int depth = 0;
  std::optional<double> split_mu;  // set on internal nodes split via the CMC
  std::optional<double> split_alpha;
  bool fallback = false;  // split came from the deterministic fallback
  std::vector<std::unique_ptr<PartitionNode>> children;  // empty or size 2

  bool is_leaf() const { return children.empty(); }
};

struct DecomposeOptions {
  CmcMethod method = CmcMethod::kDbd;
  int max_variables = 100;
  std::uint64_t seed = 1;
  AnnealParams anneal;
  std::optional<MuSchedule> mu_schedule;    // default per method
  std::optional<double> balance_tol;       // default: max demand in subset
  bool inherit_alpha = false;  // keep the master problem's alpha at all depths
  DistanceMode weight_mode = DistanceMode::kExactEuclidean;
};

struct Decomposition {
  std::unique_ptr<PartitionNode> root;
  CmcMethod method = CmcMethod::kDbd;
  int max_variables = 100;
  std::uint64_t seed = 1;
  std::string instance_name;
  double sa_seconds = 0.0;  // total annealing time across all splits

  std::vector<const PartitionNode*> leaves() const;
  // Stable JSON document (no timings) for audit and reporting; byte-identical
  // across runs with the same inputs and seed.
  nlohmann::ordered_json to_json() const;
};

// Recursive bisection until every subset fits max_variables. Each oversized
// subset is split by mu-tuned constrained max-cut with alpha recomputed from
// the subset's own demand-implied vehicle count; if tuning fails, a
// deterministic balanced split takes over (flagged in the tree).
// Deterministic per (instance, options, seed).
Decomposition decompose(const Instance& inst, const DecomposeOptions& opts);

// max(1, ceil(subset demand / capacity)).
int vehicles_for(std::span<const int> subset, const Instance& inst);

struct Subproblem {
  std::vector<int> subset;  // customer ids
  int vehicles = 0;         // K_sub
  const Instance* master = nullptr;

  std::int64_t total_demand() const;
};

// One subproblem per leaf, each with the depot and its demand-implied
// vehicle count attached.
std::vector<Subproblem> make_subproblems(const PartitionNode& root,
                                         const Instance& inst);

}  // namespace vrpsplit

#endif  // VRPSPLIT_DECOMPOSER_HPP_
