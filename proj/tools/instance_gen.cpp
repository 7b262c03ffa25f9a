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

// Regenerates the bundled benchmark stand-ins under data/instances/.
//
// The original CVRPLIB files are not redistributed here. These synthetic
// stand-ins reproduce each instance's headline statistics (customer count,
// vehicle count, capacity, and total demand, hence the capacity utilization
// rate) with plausible geometry, so the toolkit's metrics can be exercised
// offline. Drop the real files over them for benchmark-faithful runs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "vrpsplit/instance.hpp"
#include "vrpsplit/rng.hpp"

namespace {

struct Blueprint {
  std::string name;
  int customers;
  int vehicles;
  int capacity;
  long long total_demand;
  double coord_span;
  int demand_lo;
  int demand_hi;
  bool clustered;
};

// Headline statistics of the six benchmark instances (per CVRPLIB).
const std::vector<Blueprint> kBlueprints = {
    {"M-n151-k12", 150, 12, 200, 2235, 70.0, 1, 30, false},
    {"M-n200-k17", 199, 17, 200, 3186, 70.0, 1, 30, false},
    {"X-n101-k25", 100, 25, 206, 5147, 1000.0, 1, 100, true},
    {"X-n200-k36", 199, 36, 402, 14264, 1000.0, 44, 100, true},
    {"X-n261-k13", 260, 13, 1081, 13381, 1000.0, 1, 100, true},
    {"X-n401-k29", 400, 29, 745, 21274, 1000.0, 1, 100, true},
};

std::uint64_t name_seed(const std::string& name) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (char c : name) h = vrpsplit::mix64(h ^ static_cast<unsigned char>(c));
  return h;
}

vrpsplit::Instance synthesize(const Blueprint& bp) {
  std::mt19937_64 rng(name_seed(bp.name));
  const double span = bp.coord_span;
  const vrpsplit::Point depot{std::floor(span / 2), std::floor(span / 2)};

  auto random_point = [&](double lo, double hi) {
    std::uniform_int_distribution<int> u(static_cast<int>(lo),
                                         static_cast<int>(hi));
    return vrpsplit::Point{static_cast<double>(u(rng)),
                           static_cast<double>(u(rng))};
  };

  std::vector<vrpsplit::Point> seeds;
  if (bp.clustered) {
    int n_seeds = 5 + static_cast<int>(rng() % 4);
    for (int s = 0; s < n_seeds; ++s) seeds.push_back(random_point(0, span));
  }

  std::vector<vrpsplit::Point> coords;
  while (static_cast<int>(coords.size()) < bp.customers) {
    vrpsplit::Point p;
    if (bp.clustered && rng() % 5 < 3) {
      const auto& c = seeds[rng() % seeds.size()];
      std::normal_distribution<double> wobble(0.0, span / 18.0);
      p.x = std::clamp(std::floor(c.x + wobble(rng) + 0.5), 0.0, span);
      p.y = std::clamp(std::floor(c.y + wobble(rng) + 0.5), 0.0, span);
    } else {
      p = random_point(0, span);
    }
    if (p.x == depot.x && p.y == depot.y) continue;  // keep angles well defined
    coords.push_back(p);
  }

  std::uniform_int_distribution<int> demand(bp.demand_lo, bp.demand_hi);
  std::vector<int> demands;
  long long sum = 0;
  for (int i = 0; i < bp.customers; ++i) {
    demands.push_back(demand(rng));
    sum += demands.back();
  }
  // Nudge individual demands until the published total is met exactly.
  while (sum != bp.total_demand) {
    auto& d = demands[rng() % demands.size()];
    if (sum > bp.total_demand && d > 1) {
      --d;
      --sum;
    } else if (sum < bp.total_demand && d < bp.demand_hi) {
      ++d;
      ++sum;
    }
  }

  return vrpsplit::Instance::create(bp.name, [&] {
    std::vector<vrpsplit::Point> all{depot};
    all.insert(all.end(), coords.begin(), coords.end());
    return all;
  }(), [&] {
    std::vector<int> all{0};
    all.insert(all.end(), demands.begin(), demands.end());
    return all;
  }(), bp.capacity, bp.vehicles);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <output-dir>\n";
    return 2;
  }
  std::filesystem::path out_dir(argv[1]);
  std::filesystem::create_directories(out_dir);
  for (const auto& bp : kBlueprints) {
    vrpsplit::Instance inst = synthesize(bp);
    auto path = out_dir / (bp.name + ".vrp");
    std::ofstream out(path);
    out << inst.to_cvrplib();
    std::cout << path.string() << "  |S|=" << inst.num_customers()
              << " K=" << inst.vehicles() << " Q=" << inst.capacity()
              << " CUR=" << inst.cur() << "\n";
  }
  return 0;
}
