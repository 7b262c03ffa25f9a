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

#include "vrpsplit/annealer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "vrpsplit/rng.hpp"

namespace vrpsplit {
namespace {

// Flattened CSR view of a QuboModel; built once per solve and shared by all
// restarts. Rows hold every quadratic term touching a variable, so flips
// update neighbor fields in one contiguous scan.
struct CompiledQubo {
  int n = 0;
  double offset = 0.0;
  std::vector<double> linear;
  std::vector<int> row_ptr;
  std::vector<int> col;
  std::vector<double> val;

  explicit CompiledQubo(const QuboModel& m)
      : n(m.num_vars()), offset(m.offset()), linear(m.num_vars(), 0.0) {
    for (const auto& [i, v] : m.linear_terms()) linear[i] = v;
    row_ptr.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
      row_ptr[i + 1] = row_ptr[i] + static_cast<int>(m.neighbors(i).size());
    col.resize(row_ptr[n]);
    val.resize(row_ptr[n]);
    std::vector<int> cursor(row_ptr.begin(), row_ptr.end() - 1);
    for (int i = 0; i < n; ++i)
      for (const auto& [j, v] : m.neighbors(i)) {
        col[cursor[i]] = j;
        val[cursor[i]] = v;
        ++cursor[i];
      }
  }

  double energy(const std::vector<std::uint8_t>& x) const {
    double e = offset;
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      double acc = linear[i];
      for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
        if (x[col[k]]) acc += 0.5 * val[k];  // each pair counted from both ends
      e += acc;
    }
    return e;
  }
};

double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

// Mean |dE| over a few random assignments; the scale that anchors the
// auto-calibrated schedule.
double typical_move_magnitude(const CompiledQubo& q, std::uint64_t seed) {
  std::mt19937_64 rng(mix64(seed));
  double sum = 0.0;
  int count = 0;
  std::vector<std::uint8_t> x(q.n);
  for (int rep = 0; rep < 3; ++rep) {
    for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1u);
    for (int i = 0; i < q.n; ++i) {
      double field = q.linear[i];
      for (int k = q.row_ptr[i]; k < q.row_ptr[i + 1]; ++k)
        if (x[q.col[k]]) field += q.val[k];
      sum += std::abs(field);
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

struct ResolvedSchedule {
  double beta_min;
  double beta_max;
};

ResolvedSchedule resolve_schedule(const CompiledQubo& q, const AnnealParams& p) {
  double beta_min = p.beta_min, beta_max = p.beta_max;
  if (beta_min <= 0.0 || beta_max <= 0.0) {
    double scale = typical_move_magnitude(q, p.seed);
    if (scale <= 0.0) scale = 1.0;
    if (beta_min <= 0.0) beta_min = -std::log(0.8) / scale;
    if (beta_max <= 0.0) beta_max = -std::log(0.01) / scale;
  }
  if (beta_min >= beta_max)
    throw std::invalid_argument("beta_min must be below beta_max");
  return {beta_min, beta_max};
}

AnnealResult run_chain(const CompiledQubo& q, const AnnealParams& params,
                       const ResolvedSchedule& sched, std::uint64_t seed) {
  std::mt19937_64 rng(mix64(seed));
  std::vector<std::uint8_t> x(q.n);
  for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1u);

  // Local fields: f[i] = linear[i] + sum_j b_ij x_j, so a flip costs O(1)
  // to evaluate and O(degree) to commit.
  std::vector<double> field(q.linear);
  for (int i = 0; i < q.n; ++i)
    for (int k = q.row_ptr[i]; k < q.row_ptr[i + 1]; ++k)
      if (x[q.col[k]]) field[i] += q.val[k];

  double energy = q.energy(x);
  double best_energy = energy;
  std::vector<std::uint8_t> best = x;

  const int sweeps = std::max(params.sweeps, 1);
  const double ratio = sched.beta_max / sched.beta_min;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double t = sweeps > 1 ? static_cast<double>(sweep) / (sweeps - 1) : 1.0;
    double beta = params.schedule == BetaSchedule::kGeometric
                      ? sched.beta_min * std::pow(ratio, t)
                      : sched.beta_min + t * (sched.beta_max - sched.beta_min);
    for (int i = 0; i < q.n; ++i) {
      double delta = x[i] ? -field[i] : field[i];
      if (delta > 0.0 && uniform01(rng) >= std::exp(-beta * delta)) continue;
      x[i] ^= 1u;
      energy += delta;
      const double s = x[i] ? 1.0 : -1.0;
      for (int k = q.row_ptr[i]; k < q.row_ptr[i + 1]; ++k)
        field[q.col[k]] += s * q.val[k];
      if (energy < best_energy) {
        best_energy = energy;
        best = x;
      }
    }
  }
  return {std::move(best), best_energy, 0.0, 1};
}

}  // namespace

AnnealResult anneal_once(const QuboModel& model, const AnnealParams& params,
                         std::uint64_t seed) {
  if (model.num_vars() < 1)
    throw std::invalid_argument("model must have at least one variable");
  auto start = std::chrono::steady_clock::now();
  CompiledQubo q(model);
  auto result = run_chain(q, params, resolve_schedule(q, params), seed);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

AnnealResult best_of_restarts(const QuboModel& model, const AnnealParams& params) {
  if (model.num_vars() < 1)
    throw std::invalid_argument("model must have at least one variable");
  if (params.restarts < 1)
    throw std::invalid_argument("restarts must be >= 1");
  auto start = std::chrono::steady_clock::now();

  CompiledQubo q(model);
  ResolvedSchedule sched = resolve_schedule(q, params);

  int threads = params.threads;
  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, params.restarts);

  struct Local {
    double energy = std::numeric_limits<double>::infinity();
    int index = std::numeric_limits<int>::max();
    std::vector<std::uint8_t> assignment;
  };
  std::vector<Local> locals(threads);

  auto work = [&](int worker) {
    Local& best = locals[worker];
    for (int r = worker; r < params.restarts; r += threads) {
      AnnealResult res = run_chain(q, params, sched, params.seed + r);
      if (res.best_energy < best.energy ||
          (res.best_energy == best.energy && r < best.index)) {
        best.energy = res.best_energy;
        best.index = r;
        best.assignment = std::move(res.best_assignment);
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // Ties break toward the lowest restart index so the winner is stable
  // under any scheduling.
  Local* winner = &locals[0];
  for (auto& cand : locals)
    if (cand.energy < winner->energy ||
        (cand.energy == winner->energy && cand.index < winner->index))
      winner = &cand;

  AnnealResult out;
  out.best_assignment = std::move(winner->assignment);
  out.best_energy = winner->energy;
  out.restarts_run = params.restarts;
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

double delta_energy(const QuboModel& model,
                    std::span<const std::uint8_t> assignment, int flip) {
  return model.delta_energy(assignment, flip);
}

}  // namespace vrpsplit
