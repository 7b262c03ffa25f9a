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

#include "bench_common.hpp"
#include "vrpsplit/annealer.hpp"

namespace vrpsplit {
namespace {

QuboModel cut_model(int n) {
  Instance inst = bench::random_instance(17, n, 10 * n, 4);
  CmcSpec spec;
  for (int c = 1; c <= n; ++c) spec.subset.push_back(c);
  spec.alpha = 0.5;
  spec.mu = 2.0;
  return build_cmc(spec, inst);
}

void BM_BuildCutModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = bench::random_instance(17, n, 10 * n, 4);
  CmcSpec spec;
  for (int c = 1; c <= n; ++c) spec.subset.push_back(c);
  spec.alpha = 0.5;
  spec.mu = 2.0;
  for (auto _ : state) {
    auto model = build_cmc(spec, inst);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_BuildCutModel)->Arg(64)->Arg(256);

void BM_AnnealSweeps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuboModel model = cut_model(n);
  AnnealParams params;
  params.sweeps = 200;
  params.restarts = 1;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto result = anneal_once(model, params, seed++);
    benchmark::DoNotOptimize(result.best_energy);
  }
  state.SetItemsProcessed(state.iterations() * params.sweeps * n);
}
BENCHMARK(BM_AnnealSweeps)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RestartSweep(benchmark::State& state) {
  QuboModel model = cut_model(96);
  AnnealParams params;
  params.sweeps = 200;
  params.restarts = static_cast<int>(state.range(0));
  params.threads = 2;
  for (auto _ : state) {
    auto result = best_of_restarts(model, params);
    benchmark::DoNotOptimize(result.best_energy);
    ++params.seed;
  }
}
BENCHMARK(BM_RestartSweep)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DeltaEnergy(benchmark::State& state) {
  QuboModel model = cut_model(256);
  std::vector<std::uint8_t> x(256);
  for (size_t i = 0; i < x.size(); ++i) x[i] = i & 1u;
  int flip = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_energy(model, x, flip));
    flip = (flip + 1) & 255;
  }
}
BENCHMARK(BM_DeltaEnergy);

}  // namespace
}  // namespace vrpsplit
