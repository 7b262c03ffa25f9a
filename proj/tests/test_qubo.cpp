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

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "vrpsplit/mu_tuning.hpp"
#include "vrpsplit/qubo.hpp"

using namespace vrpsplit;
namespace ts = vrpsplit::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<std::uint8_t> bits(std::uint64_t value, int n) {
  std::vector<std::uint8_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = (value >> i) & 1u;
  return out;
}
}  // namespace

TEST_CASE("alpha_for") {
  CHECK(alpha_for(12) == doctest::Approx(0.5));
  CHECK(alpha_for(17) == doctest::Approx(8.0 / 17.0));
  CHECK(alpha_for(1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(alpha_for(0), std::invalid_argument);
}

TEST_CASE("angular dissimilarity values and properties") {
  CHECK(angular_dissimilarity(1.3, 1.3) == doctest::Approx(0.0));
  CHECK(angular_dissimilarity(0.0, kPi) == doctest::Approx(2.0));
  CHECK(angular_dissimilarity(kPi / 2, 0.0) == doctest::Approx(1.0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    double a = u(rng), b = u(rng);
    double v = angular_dissimilarity(a, b);
    CHECK(v >= 0.0);
    CHECK(v <= 2.0);
    CHECK(v == doctest::Approx(angular_dissimilarity(b, a)));
    CHECK(v == doctest::Approx(angular_dissimilarity(a + 2 * kPi, b)));
  }
}

TEST_CASE("polar angles measured from the depot") {
  auto inst = ts::make_instance({{1, 0}, {0, 5}, {-2, 0}}, {1, 1, 1}, 10, 1);
  auto angles = polar_angles(inst, std::vector<int>{1, 2, 3});
  CHECK(angles[0] == doctest::Approx(0.0));
  CHECK(angles[1] == doctest::Approx(kPi / 2));
  CHECK(angles[2] == doctest::Approx(kPi));
}

TEST_CASE("customer on the depot gets angle zero") {
  auto inst = ts::make_instance({{0, 0}, {1, 1}}, {1, 1}, 10, 1);
  auto angles = polar_angles(inst, std::vector<int>{1, 2});
  CHECK(angles[0] == 0.0);
}

TEST_CASE("energy evaluation basics") {
  QuboModel zero(3);
  CHECK(zero.energy(bits(0b101, 3)) == 0.0);

  QuboModel single(1);
  single.add_linear(0, -1.0);
  CHECK(single.energy(bits(1, 1)) == doctest::Approx(-1.0));
  CHECK(single.energy(bits(0, 1)) == 0.0);

  CHECK_THROWS_AS(single.energy(bits(0, 2)), std::invalid_argument);
}

TEST_CASE("energy matches term-by-term reference on random models") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    QuboModel m = ts::random_qubo(rng, 10);
    for (int t = 0; t < 50; ++t) {
      auto a = bits(rng() & 0x3ff, 10);
      CHECK(m.energy(a) == doctest::Approx(ts::reference_energy(m, a)).epsilon(1e-9));
    }
  }
}

TEST_CASE("ising conversion of a single product term") {
  QuboModel m(2);
  m.add_quadratic(0, 1, 4.0);
  IsingModel ising = to_ising(m);
  CHECK(ising.couplings.at({0, 1}) == doctest::Approx(-1.0));
  CHECK(ising.fields.at(0) == doctest::Approx(-1.0));
  CHECK(ising.fields.at(1) == doctest::Approx(-1.0));
  CHECK(ising.offset == doctest::Approx(1.0));
}

TEST_CASE("empty qubo maps to empty ising") {
  QuboModel m(4);
  IsingModel ising = to_ising(m);
  CHECK(ising.couplings.empty());
  CHECK(ising.fields.empty());
  CHECK(ising.offset == 0.0);
}

TEST_CASE("qubo and ising energies agree on every assignment") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    QuboModel m = ts::random_qubo(rng, 8);
    IsingModel ising = to_ising(m);
    for (std::uint64_t v = 0; v < 256; ++v) {
      auto x = bits(v, 8);
      std::vector<std::int8_t> s(8);
      for (int i = 0; i < 8; ++i) s[i] = x[i] ? 1 : -1;
      CHECK(m.energy(x) == doctest::Approx(ising.energy(s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("cmc edge cases and penalty offsets") {
  auto inst = ts::make_instance({{0, 1}, {3, 1}, {7, 1}}, {2, 3, 4}, 20, 2);
  CmcSpec spec;
  spec.subset = {1, 2, 3};
  spec.alpha = 0.5;

  SUBCASE("mu = 0: all-zeros assignment has zero energy") {
    spec.mu = 0.0;
    QuboModel m = build_cmc(spec, inst);
    CHECK(m.energy(bits(0, 3)) == doctest::Approx(0.0));
  }
  SUBCASE("mu > 0: all-zeros energy equals the constant penalty") {
    spec.mu = 2.5;
    QuboModel m = build_cmc(spec, inst);
    double total = 2 + 3 + 4;
    CHECK(m.energy(bits(0, 3)) ==
          doctest::Approx(2.5 * 0.5 * 0.5 * total * total));
  }
  SUBCASE("empty subset rejected") {
    spec.subset.clear();
    CHECK_THROWS_AS(build_cmc(spec, inst), std::invalid_argument);
  }
  SUBCASE("depot or duplicates rejected") {
    spec.subset = {0, 1};
    CHECK_THROWS_AS(build_cmc(spec, inst), std::invalid_argument);
    spec.subset = {1, 1};
    CHECK_THROWS_AS(build_cmc(spec, inst), std::invalid_argument);
  }
}

TEST_CASE("distance-based cut on collinear customers separates the far pair") {
  // Customers at x = 0, 1, 2: the best cut puts the two extremes apart.
  auto inst = ts::make_instance({{0, 0}, {1, 0}, {2, 0}}, {1, 1, 1}, 10, 2,
                                {0.0, 5.0}, DistanceMode::kExactEuclidean);
  CmcSpec spec;
  spec.subset = {1, 2, 3};
  spec.mu = 0.0;
  QuboModel m = build_cmc(spec, inst);
  auto brute = ts::brute_force_minimum(m);
  CHECK(brute.min_energy == doctest::Approx(-3.0));
  CHECK(brute.argmin[0] != brute.argmin[2]);  // extremes on opposite sides
}

TEST_CASE("mu = 0 minimum equals the negated maximum cut") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    auto inst = ts::random_instance(rng, 9, 30, 2);
    CmcSpec spec;
    spec.method = rep % 2 == 0 ? CmcMethod::kDbd : CmcMethod::kAbd;
    for (int c = 1; c <= 9; ++c) spec.subset.push_back(c);
    spec.mu = 0.0;
    QuboModel m = build_cmc(spec, inst);

    // Direct max-cut enumeration from the weights.
    std::vector<double> angles = polar_angles(inst, spec.subset);
    double best_cut = 0.0;
    for (std::uint64_t v = 0; v < (1u << 9); ++v) {
      double cut = 0.0;
      for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b) {
          bool sa = (v >> a) & 1, sb = (v >> b) & 1;
          if (sa == sb) continue;
          cut += spec.method == CmcMethod::kDbd
                     ? inst.distance(spec.subset[a], spec.subset[b],
                                     DistanceMode::kExactEuclidean)
                     : angular_dissimilarity(angles[a], angles[b]);
        }
      best_cut = std::max(best_cut, cut);
    }
    CHECK(ts::brute_force_minimum(m).min_energy ==
          doctest::Approx(-best_cut).epsilon(1e-9));
    spec.subset.clear();
  }
}

TEST_CASE("subset reordering only relabels the model") {
  std::mt19937_64 rng(31);
  auto inst = ts::random_instance(rng, 8, 30, 2);
  CmcSpec spec;
  spec.subset = {1, 2, 3, 4, 5, 6, 7, 8};
  spec.mu = 1.5;
  spec.alpha = 0.5;
  QuboModel a = build_cmc(spec, inst);
  std::shuffle(spec.subset.begin(), spec.subset.end(), rng);
  QuboModel b = build_cmc(spec, inst);
  CHECK(ts::brute_force_minimum(a).min_energy ==
        doctest::Approx(ts::brute_force_minimum(b).min_energy).epsilon(1e-9));
}

TEST_CASE("complement flip keeps the cut term, changes the penalty") {
  auto inst = ts::make_instance({{0, 0}, {4, 1}, {9, 3}, {2, 8}}, {1, 2, 3, 4},
                                20, 3);
  CmcSpec spec;
  spec.subset = {1, 2, 3, 4};
  spec.alpha = alpha_for(3);  // 1/3: asymmetric target
  spec.mu = 0.0;
  QuboModel cut_only = build_cmc(spec, inst);
  spec.mu = 2.0;
  QuboModel with_penalty = build_cmc(spec, inst);

  std::mt19937_64 rng(37);
  std::vector<int> demands = {1, 2, 3, 4};
  for (int t = 0; t < 30; ++t) {
    auto x = bits(rng() & 0xf, 4);
    auto flipped = x;
    for (auto& b : flipped) b ^= 1u;
    CHECK(cut_only.energy(x) == doctest::Approx(cut_only.energy(flipped)));
    double pen_x = with_penalty.energy(x) - cut_only.energy(x);
    double pen_f = with_penalty.energy(flipped) - cut_only.energy(flipped);
    long long side = 0;
    for (int i = 0; i < 4; ++i)
      if (x[i]) side += demands[i];
    // With alpha != 1/2 the penalties only coincide on an exact half split.
    if (2 * side != 10) CHECK(pen_x != doctest::Approx(pen_f).epsilon(1e-12));
  }
}

TEST_CASE("plain-text serialization round-trips") {
  std::mt19937_64 rng(41);
  QuboModel m = ts::random_qubo(rng, 12);
  m.set_var_labels({5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27});
  QuboModel again = QuboModel::from_text(m.to_text());
  CHECK(again.num_vars() == m.num_vars());
  CHECK(again.offset() == doctest::Approx(m.offset()));
  CHECK(again.linear_terms() == m.linear_terms());
  CHECK(again.quadratic_terms() == m.quadratic_terms());
}

// Five customers whose unconstrained best cut is demand-imbalanced; the
// tuned penalty must rebalance it to a 6/7 demand split.
TEST_CASE("mu tuning rebalances a two-cluster layout") {
  // A, B on the left (demands 1, 3); C, D, E on the right (3, 4, 2); E sits
  // between the clusters.
  auto inst = ts::make_instance(
      {{0, 0}, {0, 1}, {10, 0}, {10, 1}, {6, 0}}, {1, 3, 3, 4, 2}, 20, 2,
      {5.0, -5.0}, DistanceMode::kExactEuclidean);
  CmcSpec spec;
  spec.subset = {1, 2, 3, 4, 5};
  spec.alpha = 0.5;

  // Geometry check: with mu = 0 the optimum separates {A,B} (demand 4) from
  // {C,D,E} (demand 9).
  spec.mu = 0.0;
  auto brute = ts::brute_force_minimum(build_cmc(spec, inst));
  long long side_demand = 0;
  std::vector<int> demands = {1, 3, 3, 4, 2};
  for (int i = 0; i < 5; ++i)
    if (brute.argmin[i] == brute.argmin[0]) side_demand += demands[i];
  CHECK((side_demand == 4 || side_demand == 9));

  AnnealParams params;
  params.sweeps = 300;
  params.restarts = 20;
  MuTuneResult tuned = tune_mu(spec, inst, params, 99, std::nullopt, 1.0);
  CHECK(tuned.balanced);
  CHECK(tuned.mu > 0.0);
  auto demand_of = [&](const std::vector<int>& side) {
    long long d = 0;
    for (int c : side) d += inst.demand(c);
    return d;
  };
  long long d1 = demand_of(tuned.side_one), d2 = demand_of(tuned.side_two);
  CHECK(std::min(d1, d2) == 6);
  CHECK(std::max(d1, d2) == 7);
}

TEST_CASE("two equal customers balance at mu zero") {
  auto inst = ts::make_instance({{1, 0}, {0, 1}}, {5, 5}, 10, 2);
  CmcSpec spec;
  spec.subset = {1, 2};
  spec.alpha = 0.5;
  AnnealParams params;
  params.sweeps = 100;
  params.restarts = 5;
  MuTuneResult tuned = tune_mu(spec, inst, params, 4);
  CHECK(tuned.mu == 0.0);
  CHECK(tuned.balanced);
  CHECK(tuned.side_one.size() == 1);
  CHECK(tuned.side_two.size() == 1);
}

TEST_CASE("dominant customer exhausts the schedule") {
  auto inst = ts::make_instance(
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}}, {90, 4, 3, 2, 1}, 100, 2);
  CmcSpec spec;
  spec.subset = {1, 2, 3, 4, 5};
  spec.alpha = 0.5;  // target 50, best achievable imbalance is 40
  AnnealParams params;
  params.sweeps = 100;
  params.restarts = 5;
  MuSchedule schedule;
  schedule.step = 1.0;
  schedule.max_steps = 20;
  try {
    tune_mu(spec, inst, params, 12, schedule, 30.0);
    FAIL("expected TuningError");
  } catch (const TuningError& e) {
    CHECK(e.best().steps_tried >= 1);
    CHECK(!e.best().side_one.empty());
    CHECK(!e.best().side_two.empty());
    CHECK(e.best().imbalance >= 40.0);
  }
}
