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

#include "vrpsplit/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace vrpsplit {
namespace {

constexpr int kMatrixVertexLimit = 2000;

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool is_number(const std::string& tok) {
  if (tok.empty()) return false;
  char* end = nullptr;
  std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size();
}

double to_real(const std::string& tok, int line) {
  if (!is_number(tok))
    throw ParseError("expected a number, got '" + tok + "'", line);
  return std::strtod(tok.c_str(), nullptr);
}

long long to_int(const std::string& tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// Shortest round-trip decimal representation; integral values print bare.
std::string format_real(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

std::optional<int> vehicles_from_name(const std::string& name) {
  // Trailing "-kZ" / "kZ" suffix of the CVRPLIB naming convention.
  size_t pos = name.find_last_of("kK");
  if (pos == std::string::npos || pos + 1 >= name.size()) return std::nullopt;
  if (pos == 0 || (name[pos - 1] != '-' && name[pos - 1] != '_'))
    return std::nullopt;
  int v = 0;
  auto first = name.data() + pos + 1;
  auto last = name.data() + name.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last || v <= 0) return std::nullopt;
  return v;
}

}  // namespace

Instance Instance::parse(std::string_view text, const ParseOptions& opts) {
  std::map<std::string, std::string> fields;
  std::map<int, Point> coords_by_id;
  std::map<int, long long> demand_by_id;
  std::vector<int> depot_ids;
  bool saw_coords = false, saw_demands = false, saw_depot = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  enum class Section { kNone, kCoords, kDemands, kDepot } section = Section::kNone;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line == "EOF") break;

    std::string upper = line;
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    if (upper.rfind("NODE_COORD_SECTION", 0) == 0) {
      section = Section::kCoords;
      saw_coords = true;
      continue;
    }
    if (upper.rfind("DEMAND_SECTION", 0) == 0) {
      section = Section::kDemands;
      saw_demands = true;
      continue;
    }
    if (upper.rfind("DEPOT_SECTION", 0) == 0) {
      section = Section::kDepot;
      saw_depot = true;
      continue;
    }
    if (upper.find("EDGE_WEIGHT_SECTION") == 0)
      throw ParseError("EDGE_WEIGHT_SECTION (EXPLICIT matrices) not supported",
                       line_no);

    size_t colon = line.find(':');
    if (section == Section::kNone) {
      if (colon == std::string::npos)
        throw ParseError("unrecognized line '" + line + "'", line_no);
      std::string key = trim(line.substr(0, colon));
      std::transform(key.begin(), key.end(), key.begin(), ::toupper);
      fields[key] = trim(line.substr(colon + 1));
      continue;
    }

    auto toks = split_ws(line);
    switch (section) {
      case Section::kCoords: {
        if (toks.size() != 3)
          throw ParseError("node coordinate rows need 'id x y'", line_no);
        int id = static_cast<int>(to_int(toks[0], line_no));
        coords_by_id[id] = {to_real(toks[1], line_no), to_real(toks[2], line_no)};
        break;
      }
      case Section::kDemands: {
        if (toks.size() != 2)
          throw ParseError("demand rows need 'id demand'", line_no);
        int id = static_cast<int>(to_int(toks[0], line_no));
        demand_by_id[id] = to_int(toks[1], line_no);
        break;
      }
      case Section::kDepot: {
        for (const auto& t : toks) {
          long long id = to_int(t, line_no);
          if (id == -1) {
            section = Section::kNone;
            break;
          }
          depot_ids.push_back(static_cast<int>(id));
        }
        break;
      }
      case Section::kNone:
        break;
    }
  }

  if (!saw_coords) throw ParseError("NODE_COORD_SECTION missing");
  if (!saw_demands) throw ParseError("DEMAND_SECTION missing");
  if (!saw_depot) throw ParseError("DEPOT_SECTION missing");
  if (!fields.count("CAPACITY")) throw ParseError("CAPACITY missing");
  if (depot_ids.size() != 1)
    throw ParseError("expected exactly one depot id in DEPOT_SECTION, got " +
                     std::to_string(depot_ids.size()));

  if (auto it = fields.find("EDGE_WEIGHT_TYPE"); it != fields.end()) {
    if (it->second != "EUC_2D")
      throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + it->second +
                       "' (only EUC_2D)");
  }

  std::string name = fields.count("NAME") ? fields["NAME"] : "unnamed";
  int capacity = static_cast<int>(to_int(fields["CAPACITY"], -1));
  if (capacity <= 0) throw ParseError("CAPACITY must be positive");

  if (fields.count("DIMENSION")) {
    long long dim = to_int(fields["DIMENSION"], -1);
    if (dim != static_cast<long long>(coords_by_id.size()))
      throw ParseError("DIMENSION " + std::to_string(dim) + " does not match " +
                       std::to_string(coords_by_id.size()) + " coordinate rows");
  }

  std::optional<int> vehicles = opts.vehicles_override;
  if (!vehicles && fields.count("VEHICLES"))
    vehicles = static_cast<int>(to_int(fields["VEHICLES"], -1));
  if (!vehicles) vehicles = vehicles_from_name(name);
  if (!vehicles || *vehicles <= 0)
    throw ParseError(
        "vehicle count not found: expected a '-kZ' NAME suffix, a VEHICLES "
        "field, or an explicit override");

  int depot_id = depot_ids[0];
  if (!coords_by_id.count(depot_id))
    throw ParseError("depot id " + std::to_string(depot_id) +
                     " has no coordinates");

  // Reindex: depot first, then customers in ascending file id order.
  std::vector<Point> coords;
  std::vector<int> demands;
  coords.reserve(coords_by_id.size());
  demands.reserve(coords_by_id.size());
  auto demand_of = [&](int id) -> long long {
    auto it = demand_by_id.find(id);
    if (it == demand_by_id.end())
      throw ParseError("node " + std::to_string(id) + " missing from DEMAND_SECTION");
    return it->second;
  };
  coords.push_back(coords_by_id[depot_id]);
  demands.push_back(static_cast<int>(demand_of(depot_id)));
  for (const auto& [id, pt] : coords_by_id) {
    if (id == depot_id) continue;
    coords.push_back(pt);
    long long d = demand_of(id);
    if (d < 0 || d > std::numeric_limits<int>::max())
      throw ParseError("demand of node " + std::to_string(id) + " out of range");
    demands.push_back(static_cast<int>(d));
  }

  return create(std::move(name), std::move(coords), std::move(demands),
                capacity, *vehicles, opts.distance_mode);
}

Instance Instance::load(const std::filesystem::path& file,
                        const ParseOptions& opts) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open instance file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), opts);
}

Instance Instance::create(std::string name, std::vector<Point> coords,
                          std::vector<int> demands, int capacity, int vehicles,
                          DistanceMode mode) {
  Instance inst;
  inst.name_ = std::move(name);
  inst.coords_ = std::move(coords);
  inst.demands_ = std::move(demands);
  inst.capacity_ = capacity;
  inst.vehicles_ = vehicles;
  inst.mode_ = mode;
  inst.finalize();
  return inst;
}

void Instance::finalize() {
  if (coords_.size() < 2) throw ParseError("instance needs a depot and at least one customer");
  if (coords_.size() != demands_.size())
    throw ParseError("coordinate and demand counts differ");
  if (capacity_ <= 0) throw ParseError("CAPACITY must be positive");
  if (vehicles_ <= 0) throw ParseError("vehicle count must be positive");
  if (demands_[0] != 0)
    throw ParseError("depot demand must be 0, got " + std::to_string(demands_[0]));
  total_demand_ = 0;
  for (size_t i = 1; i < demands_.size(); ++i) {
    if (demands_[i] <= 0)
      throw ParseError("customer " + std::to_string(i) +
                       " must have positive demand");
    if (demands_[i] > capacity_)
      throw InfeasibleInstanceError(
          "customer " + std::to_string(i) + " demand " +
          std::to_string(demands_[i]) + " exceeds vehicle capacity " +
          std::to_string(capacity_));
    total_demand_ += demands_[i];
  }

  if (num_vertices() <= kMatrixVertexLimit) {
    int n = num_vertices();
    matrix_.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double dx = coords_[i].x - coords_[j].x;
        double dy = coords_[i].y - coords_[j].y;
        double d = std::sqrt(dx * dx + dy * dy);
        matrix_[static_cast<size_t>(i) * n + j] = d;
        matrix_[static_cast<size_t>(j) * n + i] = d;
      }
  }
}

double Instance::distance(int i, int j, DistanceMode mode) const {
  int n = num_vertices();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::out_of_range("vertex index out of range: (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") with |V|=" +
                            std::to_string(n));
  double d;
  if (!matrix_.empty()) {
    d = matrix_[static_cast<size_t>(i) * n + j];
  } else {
    double dx = coords_[i].x - coords_[j].x;
    double dy = coords_[i].y - coords_[j].y;
    d = std::sqrt(dx * dx + dy * dy);
  }
  // TSPLIB nint() convention.
  return mode == DistanceMode::kRoundedEuclidean ? std::floor(d + 0.5) : d;
}

double Instance::cur() const {
  return static_cast<double>(total_demand_) /
         (static_cast<double>(vehicles_) * capacity_);
}

std::string Instance::to_cvrplib() const {
  std::ostringstream out;
  out << "NAME : " << name_ << "\n";
  out << "COMMENT : generated by vrpsplit\n";
  out << "TYPE : CVRP\n";
  out << "DIMENSION : " << num_vertices() << "\n";
  out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
  out << "CAPACITY : " << capacity_ << "\n";
  out << "VEHICLES : " << vehicles_ << "\n";
  out << "NODE_COORD_SECTION\n";
  for (int v = 0; v < num_vertices(); ++v)
    out << (v + 1) << " " << format_real(coords_[v].x) << " "
        << format_real(coords_[v].y) << "\n";
  out << "DEMAND_SECTION\n";
  for (int v = 0; v < num_vertices(); ++v)
    out << (v + 1) << " " << demands_[v] << "\n";
  out << "DEPOT_SECTION\n1\n-1\nEOF\n";
  return out.str();
}

namespace {
// Benchmark registry: best-known objectives for the bundled instance names.
const std::vector<BksEntry>& builtin_bks() {
  static const std::vector<BksEntry> kTable = {
      {"M-n151-k12", 1053},  {"M-n200-k17", 1373},  {"X-n101-k25", 27591},
      {"X-n200-k36", 58578}, {"X-n261-k13", 26558}, {"X-n401-k29", 66154},
  };
  return kTable;
}
}  // namespace

BksEntry load_bks(const std::string& name) {
  for (const auto& e : builtin_bks())
    if (e.instance_name == name) return e;
  throw LookupError("no best-known objective registered for '" + name +
                    "'; add it to a bks.tsv registry file and pass its path");
}

BksEntry load_bks(const std::string& name, const std::filesystem::path& registry) {
  for (const auto& e : read_bks_registry(registry))
    if (e.instance_name == name) return e;
  return load_bks(name);
}

std::vector<BksEntry> read_bks_registry(const std::filesystem::path& registry) {
  std::ifstream in(registry);
  if (!in) throw Error("cannot open BKS registry: " + registry.string());
  std::vector<BksEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto toks = split_ws(t);
    if (toks.size() != 2)
      throw ParseError("registry rows need 'name objective'", line_no);
    BksEntry e{toks[0], to_int(toks[1], line_no)};
    if (e.bks_objective <= 0)
      throw ParseError("objective must be positive", line_no);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace vrpsplit
