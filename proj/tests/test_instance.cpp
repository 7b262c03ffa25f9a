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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "test_support.hpp"
#include "vrpsplit/instance.hpp"

using namespace vrpsplit;

namespace {

const char* kTinyVrp = R"(NAME : tiny-n3-k2
COMMENT : three nodes
TYPE : CVRP
DIMENSION : 3
EDGE_WEIGHT_TYPE : EUC_2D
CAPACITY : 10
NODE_COORD_SECTION
1 0 0
2 3 4
3 0 5
DEMAND_SECTION
1 0
2 4
3 6
DEPOT_SECTION
1
-1
EOF
)";

std::filesystem::path data_file(const std::string& rel) {
  return std::filesystem::path(VRPSPLIT_DATA_DIR) / rel;
}

}  // namespace

TEST_CASE("parses a minimal synthetic file") {
  Instance inst = Instance::parse(kTinyVrp);
  CHECK(inst.name() == "tiny-n3-k2");
  CHECK(inst.num_vertices() == 3);
  CHECK(inst.num_customers() == 2);
  CHECK(inst.capacity() == 10);
  CHECK(inst.vehicles() == 2);
  CHECK(inst.demand(0) == 0);
  CHECK(inst.demand(1) == 4);
  CHECK(inst.total_demand() == 10);
}

TEST_CASE("parses the bundled M-n151-k12 header") {
  Instance inst = Instance::load(data_file("instances/M-n151-k12.vrp"));
  CHECK(inst.num_customers() == 150);
  CHECK(inst.vehicles() == 12);
  CHECK(inst.capacity() == 200);
}

TEST_CASE("missing sections are named in the error") {
  std::string no_demand = kTinyVrp;
  auto pos = no_demand.find("DEMAND_SECTION");
  no_demand.erase(pos, no_demand.find("DEPOT_SECTION") - pos);
  CHECK_THROWS_WITH_AS(Instance::parse(no_demand),
                       doctest::Contains("DEMAND_SECTION"), ParseError);

  std::string no_depot = kTinyVrp;
  pos = no_depot.find("DEPOT_SECTION");
  no_depot.erase(pos, no_depot.find("EOF") - pos);
  CHECK_THROWS_WITH_AS(Instance::parse(no_depot),
                       doctest::Contains("DEPOT_SECTION"), ParseError);
}

TEST_CASE("non-numeric tokens report the line") {
  std::string bad = kTinyVrp;
  bad.replace(bad.find("2 3 4"), 5, "2 x 4");
  try {
    Instance::parse(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 9);
    CHECK(std::string(e.what()).find("line 9") != std::string::npos);
  }
}

TEST_CASE("demand above capacity is an infeasibility error") {
  std::string bad = kTinyVrp;
  bad.replace(bad.find("3 6"), 3, "3 60");
  CHECK_THROWS_AS(Instance::parse(bad), InfeasibleInstanceError);
}

TEST_CASE("vehicle count falls back from VEHICLES field to name suffix") {
  Instance from_name = Instance::parse(kTinyVrp);
  CHECK(from_name.vehicles() == 2);

  std::string with_field = kTinyVrp;
  with_field.insert(with_field.find("NODE_COORD_SECTION"), "VEHICLES : 5\n");
  CHECK(Instance::parse(with_field).vehicles() == 5);

  ParseOptions opts;
  opts.vehicles_override = 7;
  CHECK(Instance::parse(with_field, opts).vehicles() == 7);

  std::string no_k = kTinyVrp;
  no_k.replace(no_k.find("tiny-n3-k2"), 10, "tiny-n3");
  CHECK_THROWS_AS(Instance::parse(no_k), ParseError);
}

TEST_CASE("distance follows the EUC_2D rounding convention") {
  auto inst = testsupport::make_instance({{3, 4}, {1, 1}}, {1, 1}, 10, 1);
  CHECK(inst.distance(0, 1) == 5.0);  // exact Pythagorean triple
  CHECK(inst.distance(0, 1, DistanceMode::kExactEuclidean) == 5.0);
  CHECK(inst.distance(0, 2) == 1.0);  // nint(1.4142...)
  CHECK(inst.distance(0, 2, DistanceMode::kExactEuclidean) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(inst.distance(0, 3), std::out_of_range);
  CHECK_THROWS_AS(inst.distance(-1, 0), std::out_of_range);
}

TEST_CASE("distance is symmetric and non-negative") {
  std::mt19937_64 rng(7);
  auto inst = testsupport::random_instance(rng, 30, 50, 3);
  for (int t = 0; t < 200; ++t) {
    int i = static_cast<int>(rng() % inst.num_vertices());
    int j = static_cast<int>(rng() % inst.num_vertices());
    CHECK(inst.distance(i, j) == inst.distance(j, i));
    CHECK(inst.distance(i, j) >= 0.0);
  }
}

TEST_CASE("cur matches the definition") {
  auto inst = testsupport::make_instance({{1, 0}, {2, 0}}, {5, 5}, 10, 1);
  CHECK(inst.cur() == doctest::Approx(1.0));

  Instance m151 = Instance::load(data_file("instances/M-n151-k12.vrp"));
  CHECK(m151.cur() == doctest::Approx(0.9313).epsilon(0.0002));

  Instance x101 = Instance::load(data_file("instances/X-n101-k25.vrp"));
  CHECK(x101.cur() == doctest::Approx(0.9994).epsilon(0.0002));
}

TEST_CASE("cur is invariant under customer reordering") {
  std::mt19937_64 rng(11);
  auto inst = testsupport::random_instance(rng, 20, 40, 4);
  std::vector<Point> pts;
  std::vector<int> ds;
  for (int c = 1; c <= 20; ++c) {
    pts.push_back(inst.coord(c));
    ds.push_back(inst.demand(c));
  }
  std::vector<size_t> perm(20);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Point> pts2;
  std::vector<int> ds2;
  for (size_t k : perm) {
    pts2.push_back(pts[k]);
    ds2.push_back(ds[k]);
  }
  auto shuffled = testsupport::make_instance(pts2, ds2, 40, 4, inst.coord(0));
  CHECK(inst.cur() == doctest::Approx(shuffled.cur()));
}

TEST_CASE("serialization round-trips") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    auto inst = testsupport::random_instance(rng, 15, 30, 2);
    Instance again = Instance::parse(inst.to_cvrplib());
    CHECK(again == inst);
  }
}

TEST_CASE("bks registry lookups") {
  CHECK(load_bks("M-n151-k12").bks_objective == 1053);
  CHECK(load_bks("X-n261-k13").bks_objective == 26558);
  CHECK_THROWS_AS(load_bks("no-such-instance"), LookupError);

  auto tmp = std::filesystem::temp_directory_path() / "vrpsplit_bks_test.tsv";
  {
    std::ofstream out(tmp);
    out << "# registry\nmy-toy 123\n";
  }
  CHECK(load_bks("my-toy", tmp).bks_objective == 123);
  CHECK(load_bks("M-n151-k12", tmp).bks_objective == 1053);  // builtin fallback
  std::filesystem::remove(tmp);
}

TEST_CASE("bundled registry file agrees with the builtin table") {
  auto entries = read_bks_registry(data_file("bks.tsv"));
  CHECK(entries.size() == 6);
  for (const auto& e : entries)
    CHECK(load_bks(e.instance_name).bks_objective == e.bks_objective);
}
