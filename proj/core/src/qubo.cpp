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

#include "vrpsplit/qubo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vrpsplit {

QuboModel::QuboModel(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("num_vars must be >= 0");
  adjacency_.resize(num_vars);
}

void QuboModel::check_var(int i) const {
  if (i < 0 || i >= num_vars_)
    throw std::out_of_range("variable index " + std::to_string(i) +
                            " out of range for " + std::to_string(num_vars_) +
                            " variables");
}

void QuboModel::add_linear(int i, double v) {
  check_var(i);
  linear_[i] += v;
}

void QuboModel::add_quadratic(int i, int j, double v) {
  check_var(i);
  check_var(j);
  if (i == j) throw std::invalid_argument("self-loop quadratic term");
  if (i > j) std::swap(i, j);
  quadratic_[{i, j}] += v;
  adjacency_[i].emplace_back(j, v);
  adjacency_[j].emplace_back(i, v);
}

double QuboModel::linear(int i) const {
  check_var(i);
  auto it = linear_.find(i);
  return it == linear_.end() ? 0.0 : it->second;
}

double QuboModel::quadratic(int i, int j) const {
  check_var(i);
  check_var(j);
  if (i > j) std::swap(i, j);
  auto it = quadratic_.find({i, j});
  return it == quadratic_.end() ? 0.0 : it->second;
}

std::span<const std::pair<int, double>> QuboModel::neighbors(int i) const {
  check_var(i);
  return adjacency_[i];
}

void QuboModel::set_var_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != num_vars_)
    throw std::invalid_argument("label count must equal num_vars");
  var_labels_ = std::move(labels);
}

double QuboModel::energy(std::span<const std::uint8_t> assignment) const {
  if (static_cast<int>(assignment.size()) != num_vars_)
    throw std::invalid_argument("assignment length " +
                                std::to_string(assignment.size()) +
                                " != num_vars " + std::to_string(num_vars_));
  double e = offset_;
  for (const auto& [i, v] : linear_)
    if (assignment[i]) e += v;
  for (const auto& [ij, v] : quadratic_)
    if (assignment[ij.first] && assignment[ij.second]) e += v;
  return e;
}

double QuboModel::delta_energy(std::span<const std::uint8_t> assignment,
                               int flip) const {
  if (static_cast<int>(assignment.size()) != num_vars_)
    throw std::invalid_argument("assignment length mismatch");
  check_var(flip);
  double field = 0.0;
  auto it = linear_.find(flip);
  if (it != linear_.end()) field = it->second;
  for (const auto& [j, v] : adjacency_[flip])
    if (assignment[j]) field += v;
  return assignment[flip] ? -field : field;
}

std::string QuboModel::to_text() const {
  std::ostringstream out;
  out.precision(17);
  out << "# num_vars " << num_vars_ << "\n";
  out << "# offset " << offset_ << "\n";
  for (const auto& [i, v] : linear_) out << i << " " << i << " " << v << "\n";
  for (const auto& [ij, v] : quadratic_)
    out << ij.first << " " << ij.second << " " << v << "\n";
  return out.str();
}

QuboModel QuboModel::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int num_vars = -1;
  double offset = 0.0;
  std::vector<std::tuple<int, int, double>> triples;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string key;
      ls >> key;
      if (key == "num_vars") ls >> num_vars;
      else if (key == "offset") ls >> offset;
      continue;
    }
    int i = 0, j = 0;
    double v = 0.0;
    std::istringstream row(line);
    if (!(row >> i >> j >> v))
      throw ParseError("expected 'i j value' triple", line_no);
    triples.emplace_back(i, j, v);
  }
  if (num_vars < 0) throw ParseError("missing '# num_vars' header");
  QuboModel m(num_vars);
  m.add_offset(offset);
  for (auto [i, j, v] : triples) {
    if (i == j) m.add_linear(i, v);
    else m.add_quadratic(i, j, v);
  }
  return m;
}

double IsingModel::energy(std::span<const std::int8_t> spins) const {
  if (static_cast<int>(spins.size()) != num_spins)
    throw std::invalid_argument("spin vector length mismatch");
  double e = offset;
  for (const auto& [ij, j_val] : couplings)
    e -= j_val * spins[ij.first] * spins[ij.second];
  for (const auto& [i, h_val] : fields) e -= h_val * spins[i];
  return e;
}

IsingModel to_ising(const QuboModel& model) {
  IsingModel ising;
  ising.num_spins = model.num_vars();
  ising.offset = model.offset();
  std::vector<double> h(model.num_vars(), 0.0);
  for (const auto& [i, a] : model.linear_terms()) {
    h[i] -= a / 2.0;
    ising.offset += a / 2.0;
  }
  for (const auto& [ij, b] : model.quadratic_terms()) {
    ising.couplings[ij] -= b / 4.0;
    h[ij.first] -= b / 4.0;
    h[ij.second] -= b / 4.0;
    ising.offset += b / 4.0;
  }
  for (int i = 0; i < model.num_vars(); ++i)
    if (h[i] != 0.0) ising.fields[i] = h[i];
  std::erase_if(ising.couplings, [](const auto& kv) { return kv.second == 0.0; });
  return ising;
}

double alpha_for(int vehicles) {
  if (vehicles < 1) throw std::invalid_argument("vehicle count must be >= 1");
  return static_cast<double>(vehicles / 2) / vehicles;
}

double angular_dissimilarity(double theta_i, double theta_j) {
  return 1.0 - std::cos(theta_i - theta_j);
}

std::vector<double> polar_angles(const Instance& inst,
                                 std::span<const int> subset) {
  const Point depot = inst.coord(0);
  std::vector<double> angles;
  angles.reserve(subset.size());
  for (int c : subset) {
    const Point p = inst.coord(c);
    double dx = p.x - depot.x, dy = p.y - depot.y;
    if (dx == 0.0 && dy == 0.0) {
      std::cerr << "vrpsplit: warning: customer " << c
                << " coincides with the depot; using polar angle 0\n";
      angles.push_back(0.0);
    } else {
      angles.push_back(std::atan2(dy, dx));
    }
  }
  return angles;
}

QuboModel build_cmc(const CmcSpec& spec, const Instance& inst) {
  const auto& subset = spec.subset;
  if (subset.empty()) throw std::invalid_argument("empty customer subset");
  {
    std::set<int> dedup(subset.begin(), subset.end());
    if (dedup.size() != subset.size())
      throw std::invalid_argument("duplicate customer id in subset");
    if (dedup.count(0)) throw std::invalid_argument("subset must exclude the depot");
  }
  const int n = static_cast<int>(subset.size());

  std::vector<double> angles;
  if (spec.method == CmcMethod::kAbd) angles = polar_angles(inst, subset);

  QuboModel model(n);
  model.set_var_labels(subset);

  // Cut objective: W_ij (2 x_i x_j - x_i - x_j) over all pairs.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      double w = spec.method == CmcMethod::kDbd
                     ? inst.distance(subset[a], subset[b], spec.weight_mode)
                     : angular_dissimilarity(angles[a], angles[b]);
      if (w == 0.0) continue;
      model.add_quadratic(a, b, 2.0 * w);
      model.add_linear(a, -w);
      model.add_linear(b, -w);
    }
  }

  // Balance penalty: mu * (sum_i d_i x_i - alpha * D)^2 with D the subset's
  // total demand; expanded using x_i^2 = x_i.
  if (spec.mu != 0.0) {
    double total = 0.0;
    for (int c : subset) total += inst.demand(c);
    const double target = spec.alpha * total;
    for (int a = 0; a < n; ++a) {
      const double da = inst.demand(subset[a]);
      model.add_linear(a, spec.mu * (da * da - 2.0 * target * da));
      for (int b = a + 1; b < n; ++b)
        model.add_quadratic(a, b, 2.0 * spec.mu * da * inst.demand(subset[b]));
    }
    model.add_offset(spec.mu * target * target);
  }
  return model;
}

}  // namespace vrpsplit
