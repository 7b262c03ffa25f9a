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

#ifndef VRPSPLIT_BENCHMARKS_BENCH_COMMON_HPP_
#define VRPSPLIT_BENCHMARKS_BENCH_COMMON_HPP_

#include <random>
#include <vector>

#include "vrpsplit/instance.hpp"

namespace vrpsplit::bench {

inline Instance random_instance(std::uint64_t seed, int customers,
                                int capacity, int vehicles) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 1000);
  std::uniform_int_distribution<int> demand(1, 40);
  std::vector<Point> coords{{500.0, 500.0}};
  std::vector<int> demands{0};
  for (int i = 0; i < customers; ++i) {
    coords.push_back({static_cast<double>(coord(rng)),
                      static_cast<double>(coord(rng))});
    demands.push_back(demand(rng));
  }
  return Instance::create("bench-n" + std::to_string(customers + 1) + "-k" +
                              std::to_string(vehicles),
                          std::move(coords), std::move(demands), capacity,
                          vehicles);
}

}  // namespace vrpsplit::bench

#endif  // VRPSPLIT_BENCHMARKS_BENCH_COMMON_HPP_
