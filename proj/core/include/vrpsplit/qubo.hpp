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

#ifndef VRPSPLIT_QUBO_HPP_
#define VRPSPLIT_QUBO_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vrpsplit/instance.hpp"

namespace vrpsplit {

// Sparse quadratic binary objective
//   E(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[i,j] x_i x_j
// over x_i in {0,1}. Coefficients accumulate; quadratic keys are stored with
// i < j and no self-loops. An adjacency index is maintained so that
// delta_energy runs in time proportional to the variable's degree.
class QuboModel {
 public:
  QuboModel() = default;
  explicit QuboModel(int num_vars);

  void add_linear(int i, double v);
  void add_quadratic(int i, int j, double v);  // i != j
  void add_offset(double v) { offset_ += v; }

  int num_vars() const { return num_vars_; }
  double offset() const { return offset_; }
  double linear(int i) const;
  double quadratic(int i, int j) const;
  const std::map<int, double>& linear_terms() const { return linear_; }
  const std::map<std::pair<int, int>, double>& quadratic_terms() const {
    return quadratic_;
  }
  // (neighbor, coefficient) pairs of every quadratic term touching i.
  std::span<const std::pair<int, double>> neighbors(int i) const;

  // Maps QUBO variable index -> domain id (customer vertex for CMC models).
  // Empty when the model was not built from an instance.
  const std::vector<int>& var_labels() const { return var_labels_; }
  void set_var_labels(std::vector<int> labels);

  double energy(std::span<const std::uint8_t> assignment) const;
  // energy(after flipping `flip`) - energy(before); O(degree(flip)).
  double delta_energy(std::span<const std::uint8_t> assignment, int flip) const;

  // Plain-text sparse format: '# num_vars N' / '# offset V' header, then one
  // 'i j value' triple per line with linear terms written as 'i i value'.
  std::string to_text() const;
  static QuboModel from_text(std::string_view text);

 private:
  void check_var(int i) const;

  int num_vars_ = 0;
  double offset_ = 0.0;
  std::map<int, double> linear_;
  std::map<std::pair<int, int>, double> quadratic_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  std::vector<int> var_labels_;
};

// Spin model with energy H(s) = -sum_{i<j} J[i,j] s_i s_j - sum_i h[i] s_i
// + offset, s_i in {+1,-1}.
struct IsingModel {
  int num_spins = 0;
  std::map<std::pair<int, int>, double> couplings;
  std::map<int, double> fields;
  double offset = 0.0;

  double energy(std::span<const std::int8_t> spins) const;
};

// Exact reformulation under x_i = (1 + s_i) / 2: QUBO and Ising energies
// agree on every assignment.
IsingModel to_ising(const QuboModel& model);

enum class CmcMethod { kDbd, kAbd };

// Demand balance coefficient floor(K/2)/K for a K-vehicle (sub)problem.
double alpha_for(int vehicles);

// 1 - cos(theta_i - theta_j); symmetric, 2*pi-periodic, range [0,2].
double angular_dissimilarity(double theta_i, double theta_j);

// Polar angle of each subset member measured from the depot, aligned with
// `subset`. A customer sitting exactly on the depot gets angle 0 and a
// warning on stderr.
std::vector<double> polar_angles(const Instance& inst, std::span<const int> subset);

// One balanced-bisection problem over a customer subset.
struct CmcSpec {
  CmcMethod method = CmcMethod::kDbd;
  std::vector<int> subset;  // customer vertex ids, no depot, no duplicates
  double alpha = 0.5;
  double mu = 0.0;
  // Distance convention for the distance-based edge weights; decomposition
  // uses exact values regardless of the routing objective's rounding.
  DistanceMode weight_mode = DistanceMode::kExactEuclidean;
};

// Builds the penalized max-cut QUBO over |subset| variables: edge weights
// are pairwise distances (distance-based) or angular dissimilarities
// (angular-based) on the complete graph, node weights are demands, and the
// balance constraint enters as mu * (sum_i d_i (x_i - alpha))^2 expanded
// into linear/quadratic/offset terms.
QuboModel build_cmc(const CmcSpec& spec, const Instance& inst);

}  // namespace vrpsplit

#endif  // VRPSPLIT_QUBO_HPP_
