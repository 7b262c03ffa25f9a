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

#ifndef VRPSPLIT_ANNEALER_HPP_
#define VRPSPLIT_ANNEALER_HPP_

#include <cstdint>
#include <vector>

#include "vrpsplit/qubo.hpp"

namespace vrpsplit {

enum class BetaSchedule { kGeometric, kLinear };

struct AnnealParams {
  int sweeps = 1000;
  BetaSchedule schedule = BetaSchedule::kGeometric;
  // Inverse-temperature endpoints; 0 means auto-calibrate from sampled
  // move magnitudes (initial acceptance ~0.8, final ~0.01).
  double beta_min = 0.0;
  double beta_max = 0.0;
  int restarts = 100;
  std::uint64_t seed = 1;
  // Worker threads for best_of_restarts; 0 = hardware concurrency. The
  // result is independent of the thread count.
  int threads = 1;
};

struct AnnealResult {
  std::vector<std::uint8_t> best_assignment;
  double best_energy = 0.0;
  double wall_seconds = 0.0;
  int restarts_run = 0;
};

// One simulated-annealing run: `sweeps` passes of sequential single-bit
// Metropolis updates from a seeded random start. Deterministic per seed;
// the result never exceeds the initial assignment's energy.
AnnealResult anneal_once(const QuboModel& model, const AnnealParams& params,
                         std::uint64_t seed);

// `restarts` independent runs with seeds params.seed + 0 .. params.seed +
// restarts-1, reduced by (energy, restart index) so the winner does not
// depend on scheduling. wall_seconds covers the whole call.
AnnealResult best_of_restarts(const QuboModel& model, const AnnealParams& params);

// energy(after flip) - energy(before flip); O(degree) via the model's
// adjacency index.
double delta_energy(const QuboModel& model,
                    std::span<const std::uint8_t> assignment, int flip);

}  // namespace vrpsplit

#endif  // VRPSPLIT_ANNEALER_HPP_
