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

#ifndef VRPSPLIT_INSTANCE_HPP_
#define VRPSPLIT_INSTANCE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrpsplit/errors.hpp"

namespace vrpsplit {

// Travel-cost convention. Rounded (nearest-integer) Euclidean distances are
// the CVRPLIB EUC_2D convention and the default for routing objectives;
// exact distances are used for decomposition edge weights.
enum class DistanceMode { kRoundedEuclidean, kExactEuclidean };

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct ParseOptions {
  std::optional<int> vehicles_override;  // wins over NAME suffix / VEHICLES
  DistanceMode distance_mode = DistanceMode::kRoundedEuclidean;
};

// A parsed, validated CVRP. Vertex 0 is always the depot; vertices
// 1..num_customers() are customers. Immutable after construction and safe
// for concurrent shared reads.
class Instance {
 public:
  // Parses a CVRPLIB/TSPLIB-style document (NAME, DIMENSION, CAPACITY,
  // EDGE_WEIGHT_TYPE: EUC_2D, NODE_COORD_SECTION, DEMAND_SECTION,
  // DEPOT_SECTION). The vehicle count comes from `vehicles_override`, an
  // explicit VEHICLES field, or the `-kZ` suffix of NAME, in that order.
  static Instance parse(std::string_view text, const ParseOptions& opts = {});

  static Instance load(const std::filesystem::path& file,
                       const ParseOptions& opts = {});

  // Builds an instance directly; applies the same validation as the parser.
  // coords[0] is the depot, demands[0] must be 0.
  static Instance create(std::string name, std::vector<Point> coords,
                         std::vector<int> demands, int capacity, int vehicles,
                         DistanceMode mode = DistanceMode::kRoundedEuclidean);

  const std::string& name() const { return name_; }
  int num_vertices() const { return static_cast<int>(coords_.size()); }
  int num_customers() const { return num_vertices() - 1; }
  const Point& coord(int v) const { return coords_.at(v); }
  int demand(int v) const { return demands_.at(v); }
  std::int64_t total_demand() const { return total_demand_; }
  int capacity() const { return capacity_; }
  int vehicles() const { return vehicles_; }
  DistanceMode distance_mode() const { return mode_; }

  // Symmetric travel cost between vertices under the instance's mode (or an
  // explicit one). Throws std::out_of_range for bad indices.
  double distance(int i, int j) const { return distance(i, j, mode_); }
  double distance(int i, int j, DistanceMode mode) const;

  // Capacity utilization rate: total demand over total fleet capacity.
  double cur() const;

  // Serializes back to CVRPLIB text; parse(to_cvrplib()) round-trips.
  std::string to_cvrplib() const;

  bool operator==(const Instance&) const = default;

 private:
  Instance() = default;
  void finalize();

  std::string name_;
  std::vector<Point> coords_;
  std::vector<int> demands_;
  int capacity_ = 0;
  int vehicles_ = 0;
  DistanceMode mode_ = DistanceMode::kRoundedEuclidean;
  std::int64_t total_demand_ = 0;
  // Full |V|^2 matrix of exact distances, precomputed while it fits.
  std::vector<double> matrix_;
};

struct BksEntry {
  std::string instance_name;
  std::int64_t bks_objective = 0;
};

// Best-known objective for one of the bundled benchmark names. Throws
// LookupError for unknown names, telling the caller how to extend the
// registry.
BksEntry load_bks(const std::string& name);

// Same, but consulting a user-supplied `bks.tsv` registry first
// (whitespace-separated "name objective" lines, '#' comments).
BksEntry load_bks(const std::string& name, const std::filesystem::path& registry);

std::vector<BksEntry> read_bks_registry(const std::filesystem::path& registry);

}  // namespace vrpsplit

#endif  // VRPSPLIT_INSTANCE_HPP_
