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

#include "vrpsplit/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vrpsplit/rng.hpp"

namespace vrpsplit {
namespace {

std::int64_t subset_demand(std::span<const int> subset, const Instance& inst) {
  std::int64_t d = 0;
  for (int c : subset) d += inst.demand(c);
  return d;
}

// Deterministic balanced split used when mu tuning gives up: sort by polar
// angle (angular weights) or by distance to the subset centroid
// (distance-based weights), then first-fit by demand toward the alpha target.
std::pair<std::vector<int>, std::vector<int>> fallback_split(
    const Instance& inst, const std::vector<int>& subset, CmcMethod method,
    double alpha) {
  std::vector<int> order = subset;
  if (method == CmcMethod::kAbd) {
    auto angles = polar_angles(inst, order);
    std::vector<size_t> idx(order.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return angles[a] != angles[b] ? angles[a] < angles[b]
                                    : order[a] < order[b];
    });
    std::vector<int> sorted;
    sorted.reserve(order.size());
    for (size_t k : idx) sorted.push_back(order[k]);
    order = std::move(sorted);
  } else {
    double cx = 0, cy = 0;
    for (int c : order) {
      cx += inst.coord(c).x;
      cy += inst.coord(c).y;
    }
    cx /= order.size();
    cy /= order.size();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      auto da = std::hypot(inst.coord(a).x - cx, inst.coord(a).y - cy);
      auto db = std::hypot(inst.coord(b).x - cx, inst.coord(b).y - cy);
      return da != db ? da < db : a < b;
    });
  }

  const double target = alpha * static_cast<double>(subset_demand(subset, inst));
  std::vector<int> one, two;
  double load = 0.0;
  for (int c : order) {
    if (load + inst.demand(c) <= target) {
      one.push_back(c);
      load += inst.demand(c);
    } else {
      two.push_back(c);
    }
  }
  // Progress guarantee: never hand back an empty side.
  if (one.empty()) {
    one.push_back(two.back());
    two.pop_back();
  } else if (two.empty()) {
    two.push_back(one.back());
    one.pop_back();
  }
  return {std::move(one), std::move(two)};
}

struct SplitOutcome {
  std::vector<int> side_one;
  std::vector<int> side_two;
  std::optional<double> mu;
  double alpha = 0.0;
  bool fallback = false;
  double sa_seconds = 0.0;
};

SplitOutcome split_subset(const Instance& inst, const std::vector<int>& subset,
                          const DecomposeOptions& opts) {
  SplitOutcome out;
  const int k_current =
      opts.inherit_alpha ? inst.vehicles() : vehicles_for(subset, inst);
  out.alpha = alpha_for(k_current);

  CmcSpec spec;
  spec.method = opts.method;
  spec.subset = subset;
  spec.alpha = out.alpha;
  spec.weight_mode = opts.weight_mode;

  const std::uint64_t node_seed = seed_for_ids(opts.seed, subset);
  try {
    MuTuneResult tuned = tune_mu(spec, inst, opts.anneal, node_seed,
                                 opts.mu_schedule, opts.balance_tol);
    out.side_one = std::move(tuned.side_one);
    out.side_two = std::move(tuned.side_two);
    out.mu = tuned.mu;
    out.sa_seconds = tuned.sa_seconds;
  } catch (const TuningError& e) {
    out.sa_seconds = e.best().sa_seconds;
    auto [one, two] = fallback_split(inst, subset, opts.method, out.alpha);
    out.side_one = std::move(one);
    out.side_two = std::move(two);
    out.fallback = true;
  }
  std::sort(out.side_one.begin(), out.side_one.end());
  std::sort(out.side_two.begin(), out.side_two.end());
  return out;
}

nlohmann::ordered_json node_to_json(const PartitionNode& node) {
  nlohmann::ordered_json j;
  j["size"] = node.subset.size();
  j["subset"] = node.subset;
  j["depth"] = node.depth;
  if (node.split_mu) j["mu"] = *node.split_mu;
  if (node.split_alpha) j["alpha"] = *node.split_alpha;
  j["fallback"] = node.fallback;
  j["children"] = nlohmann::ordered_json::array();
  for (const auto& child : node.children) j["children"].push_back(node_to_json(*child));
  return j;
}

void collect_leaves(const PartitionNode& node,
                    std::vector<const PartitionNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children) collect_leaves(*child, out);
}

}  // namespace

std::vector<const PartitionNode*> Decomposition::leaves() const {
  std::vector<const PartitionNode*> out;
  if (root) collect_leaves(*root, out);
  return out;
}

nlohmann::ordered_json Decomposition::to_json() const {
  nlohmann::ordered_json j;
  j["instance"] = instance_name;
  j["method"] = method == CmcMethod::kDbd ? "dbd" : "abd";
  j["max_variables"] = max_variables;
  j["seed"] = seed;
  j["root"] = root ? node_to_json(*root) : nlohmann::ordered_json();
  auto ls = leaves();
  j["leaf_count"] = ls.size();
  nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
  for (const auto* l : ls) sizes.push_back(l->subset.size());
  j["leaf_sizes"] = sizes;
  return j;
}

Decomposition decompose(const Instance& inst, const DecomposeOptions& opts) {
  if (opts.max_variables < 2)
    throw std::invalid_argument("max_variables must be >= 2");

  Decomposition dec;
  dec.method = opts.method;
  dec.max_variables = opts.max_variables;
  dec.seed = opts.seed;
  dec.instance_name = inst.name();

  auto root = std::make_unique<PartitionNode>();
  root->subset.resize(inst.num_customers());
  std::iota(root->subset.begin(), root->subset.end(), 1);

  // Depth-first work list; every subset's split depends only on its own ids
  // and the master seed, so the traversal order cannot change the tree.
  std::vector<PartitionNode*> work{root.get()};
  while (!work.empty()) {
    PartitionNode* node = work.back();
    work.pop_back();
    if (static_cast<int>(node->subset.size()) <= opts.max_variables) continue;

    SplitOutcome split = split_subset(inst, node->subset, opts);
    dec.sa_seconds += split.sa_seconds;
    node->split_mu = split.mu;
    node->split_alpha = split.alpha;
    node->fallback = split.fallback;

    for (auto* side : {&split.side_one, &split.side_two}) {
      auto child = std::make_unique<PartitionNode>();
      child->subset = std::move(*side);
      child->depth = node->depth + 1;
      work.push_back(child.get());
      node->children.push_back(std::move(child));
    }
  }

  dec.root = std::move(root);
  return dec;
}

int vehicles_for(std::span<const int> subset, const Instance& inst) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  const std::int64_t demand = subset_demand(subset, inst);
  const std::int64_t k =
      (demand + inst.capacity() - 1) / inst.capacity();  // ceil
  return static_cast<int>(std::max<std::int64_t>(1, k));
}

std::int64_t Subproblem::total_demand() const {
  std::int64_t d = 0;
  for (int c : subset) d += master->demand(c);
  return d;
}

std::vector<Subproblem> make_subproblems(const PartitionNode& root,
                                         const Instance& inst) {
  std::vector<const PartitionNode*> ls;
  collect_leaves(root, ls);
  std::vector<Subproblem> subs;
  subs.reserve(ls.size());
  for (const auto* leaf : ls)
    subs.push_back({leaf->subset, vehicles_for(leaf->subset, inst), &inst});
  return subs;
}

}  // namespace vrpsplit
