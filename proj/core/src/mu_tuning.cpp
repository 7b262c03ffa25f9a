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

#include "vrpsplit/mu_tuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vrpsplit/rng.hpp"

namespace vrpsplit {

MuSchedule default_mu_schedule(CmcMethod method) {
  MuSchedule s;
  s.step = method == CmcMethod::kDbd ? 1.0 : 0.001;
  return s;
}

MuTuneResult tune_mu(const CmcSpec& spec, const Instance& inst,
                     const AnnealParams& annealer_params, std::uint64_t seed,
                     std::optional<MuSchedule> schedule,
                     std::optional<double> balance_tol) {
  if (spec.subset.size() < 2)
    throw std::invalid_argument("tune_mu needs a subset of size >= 2");
  const MuSchedule sched = schedule.value_or(default_mu_schedule(spec.method));
  if (sched.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (sched.step <= 0.0) throw std::invalid_argument("mu step must be positive");

  double total = 0.0, max_demand = 0.0;
  for (int c : spec.subset) {
    total += inst.demand(c);
    max_demand = std::max(max_demand, static_cast<double>(inst.demand(c)));
  }
  const double target = spec.alpha * total;
  const double tol = balance_tol.value_or(max_demand);

  MuTuneResult best;
  best.imbalance = std::numeric_limits<double>::infinity();
  double sa_seconds = 0.0;

  for (int step = 0; step < sched.max_steps; ++step) {
    const double mu =
        sched.geometric ? (step == 0 ? 0.0 : sched.step * std::pow(2.0, step - 1))
                        : sched.step * step;
    CmcSpec trial = spec;
    trial.mu = mu;
    QuboModel model = build_cmc(trial, inst);

    AnnealParams params = annealer_params;
    params.seed = combine_seed(seed, static_cast<std::uint64_t>(step));
    AnnealResult sa = best_of_restarts(model, params);
    sa_seconds += sa.wall_seconds;

    MuTuneResult cand;
    cand.mu = mu;
    cand.best_energy = sa.best_energy;
    cand.steps_tried = step + 1;
    for (size_t i = 0; i < spec.subset.size(); ++i)
      (sa.best_assignment[i] ? cand.side_one : cand.side_two)
          .push_back(spec.subset[i]);
    double side_one_demand = 0.0;
    for (int c : cand.side_one) side_one_demand += inst.demand(c);
    cand.imbalance = std::abs(side_one_demand - target);
    cand.sa_seconds = sa_seconds;

    const bool non_degenerate = !cand.side_one.empty() && !cand.side_two.empty();
    if (non_degenerate && cand.imbalance <= tol) {
      cand.balanced = true;
      return cand;
    }
    // Degenerate one-sided results count as unbalanced; keep searching.
    if (non_degenerate && cand.imbalance < best.imbalance) best = cand;
  }

  best.sa_seconds = sa_seconds;
  throw TuningError(
      "mu schedule exhausted after " + std::to_string(sched.max_steps) +
          " steps without meeting the balance tolerance " + std::to_string(tol),
      best);
}

}  // namespace vrpsplit
