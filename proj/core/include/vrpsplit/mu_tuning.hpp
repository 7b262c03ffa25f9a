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

#ifndef VRPSPLIT_MU_TUNING_HPP_
#define VRPSPLIT_MU_TUNING_HPP_

#include <optional>
#include <vector>

#include "vrpsplit/annealer.hpp"
#include "vrpsplit/qubo.hpp"

namespace vrpsplit {

// Penalty-weight search grid. The default step is 1 for distance-based
// weights (wide dynamic range) and 0.001 for angular ones (range [0,2]).
// `geometric` switches from mu_k = k*step to mu_k = step * 2^(k-1).
struct MuSchedule {
  double step = 1.0;
  int max_steps = 1000;
  bool geometric = false;
};

MuSchedule default_mu_schedule(CmcMethod method);

struct MuTuneResult {
  double mu = 0.0;
  std::vector<int> side_one;  // customer ids with x=1
  std::vector<int> side_two;  // customer ids with x=0
  double best_energy = 0.0;
  double imbalance = 0.0;  // |demand(side_one) - alpha * demand(subset)|
  int steps_tried = 0;
  double sa_seconds = 0.0;
  bool balanced = false;
};

// Raised when the schedule is exhausted without meeting the balance
// criterion; carries the closest-to-balance partition seen.
class TuningError : public Error {
 public:
  TuningError(const std::string& msg, MuTuneResult best)
      : Error(msg), best_(std::move(best)) {}
  const MuTuneResult& best() const { return best_; }

 private:
  MuTuneResult best_;
};

// Walks mu up the schedule, running best-of-restarts annealing at each value,
// and returns at the first mu whose best partition has two non-empty sides
// with |demand(side_one) - alpha * demand(subset)| <= balance_tol. The
// tolerance defaults to the subset's maximum single demand (one-customer
// granularity). spec.mu is ignored.
MuTuneResult tune_mu(const CmcSpec& spec, const Instance& inst,
                     const AnnealParams& annealer_params, std::uint64_t seed,
                     std::optional<MuSchedule> schedule = std::nullopt,
                     std::optional<double> balance_tol = std::nullopt);

}  // namespace vrpsplit

#endif  // VRPSPLIT_MU_TUNING_HPP_
