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

#include <benchmark/benchmark.h>

#include <numeric>

#include "bench_common.hpp"
#include "vrpsplit/decomposer.hpp"
#include "vrpsplit/routing.hpp"

namespace vrpsplit {
namespace {

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = bench::random_instance(23, n, 400, std::max(2, n / 25));
  DecomposeOptions opts;
  opts.method = CmcMethod::kDbd;
  opts.max_variables = 50;
  opts.anneal.sweeps = 150;
  opts.anneal.restarts = 10;
  opts.anneal.threads = 2;
  for (auto _ : state) {
    opts.seed++;
    auto dec = decompose(inst, opts);
    benchmark::DoNotOptimize(dec.leaves().size());
  }
}
BENCHMARK(BM_Decompose)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_SavingsAndLocalSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = bench::random_instance(29, n, 600, std::max(2, n / 20));
  Subproblem sub;
  sub.subset.resize(n);
  std::iota(sub.subset.begin(), sub.subset.end(), 1);
  sub.vehicles = vehicles_for(sub.subset, inst);
  sub.master = &inst;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto sol = solve_heuristic(sub, Budget::of_rounds(5), seed++);
    benchmark::DoNotOptimize(sol->objective);
  }
}
BENCHMARK(BM_SavingsAndLocalSearch)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ExactTinyCvrp(benchmark::State& state) {
  Instance inst = bench::random_instance(31, 9, 120, 3);
  Subproblem sub;
  sub.subset = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  sub.vehicles = 3;
  sub.master = &inst;
  for (auto _ : state) {
    auto sol = solve_exact(sub);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_ExactTinyCvrp)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vrpsplit
