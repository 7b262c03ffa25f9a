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

#include "vrpsplit/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "vrpsplit/rng.hpp"

namespace vrpsplit {
namespace {

using Clock = std::chrono::steady_clock;

nlohmann::ordered_json point_to_json(const ConvergencePoint& p) {
  nlohmann::ordered_json j;
  j["wall_ms"] = p.wall_seconds * 1000.0;
  j["objective"] = p.objective;
  if (std::isnan(p.gap_pct))
    j["gap_pct"] = nullptr;
  else
    j["gap_pct"] = p.gap_pct;
  return j;
}

}  // namespace

std::string to_string(RunMethod method) {
  switch (method) {
    case RunMethod::kNaive: return "naive";
    case RunMethod::kDbd: return "dbd";
    case RunMethod::kAbd: return "abd";
  }
  return "unknown";
}

RunMethod run_method_from_string(const std::string& name) {
  if (name == "naive") return RunMethod::kNaive;
  if (name == "dbd") return RunMethod::kDbd;
  if (name == "abd") return RunMethod::kAbd;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected naive, dbd, or abd)");
}

nlohmann::ordered_json RunRecord::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = "run_record";
  j["instance"] = instance_name;
  j["method"] = vrpsplit::to_string(method);
  j["trial"] = trial;
  j["seed"] = seed;
  j["sa_seconds"] = sa_seconds;
  j["subproblem_count"] = subproblem_count;
  j["n_variables_master"] = n_variables_master;
  j["n_variables_decomposed"] = n_variables_decomposed;
  j["vr_rate_pct"] = vr_rate_pct;
  j["fs_flag"] = fs_flag;
  j["objective"] = objective ? nlohmann::ordered_json(*objective)
                             : nlohmann::ordered_json(nullptr);
  j["gap_pct"] = gap_pct ? nlohmann::ordered_json(*gap_pct)
                         : nlohmann::ordered_json(nullptr);
  j["leaf_sizes"] = leaf_sizes;
  j["leaf_vehicles"] = leaf_vehicles;
  j["fallback_splits"] = fallback_splits;
  j["total_seconds"] = total_seconds;
  j["incumbents"] = nlohmann::ordered_json::array();
  for (const auto& p : incumbents) j["incumbents"].push_back(point_to_json(p));
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("type", "") != "run_record")
    throw ParseError("not a run_record document");
  RunRecord r;
  r.instance_name = j.at("instance").get<std::string>();
  r.method = run_method_from_string(j.at("method").get<std::string>());
  r.trial = j.at("trial").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.sa_seconds = j.at("sa_seconds").get<double>();
  r.subproblem_count = j.at("subproblem_count").get<int>();
  r.n_variables_master = j.at("n_variables_master").get<std::int64_t>();
  r.n_variables_decomposed = j.at("n_variables_decomposed").get<std::int64_t>();
  r.vr_rate_pct = j.at("vr_rate_pct").get<double>();
  r.fs_flag = j.at("fs_flag").get<bool>();
  if (!j.at("objective").is_null()) r.objective = j.at("objective").get<double>();
  if (!j.at("gap_pct").is_null()) r.gap_pct = j.at("gap_pct").get<double>();
  r.leaf_sizes = j.value("leaf_sizes", std::vector<int>{});
  r.leaf_vehicles = j.value("leaf_vehicles", std::vector<int>{});
  r.fallback_splits = j.value("fallback_splits", 0);
  r.total_seconds = j.value("total_seconds", 0.0);
  for (const auto& p : j.at("incumbents")) {
    ConvergencePoint cp;
    cp.wall_seconds = p.at("wall_ms").get<double>() / 1000.0;
    cp.objective = p.at("objective").get<double>();
    if (!p.at("gap_pct").is_null()) cp.gap_pct = p.at("gap_pct").get<double>();
    r.incumbents.push_back(cp);
  }
  return r;
}

std::int64_t count_variables(std::int64_t v, std::int64_t s, std::int64_t k) {
  return v * s * k + s * k;
}

double vr_rate(std::int64_t n_master, std::int64_t n_decomposed) {
  if (n_master <= 0)
    throw std::invalid_argument("master variable count must be positive");
  return (1.0 - static_cast<double>(n_decomposed) /
                    static_cast<double>(n_master)) *
         100.0;
}

double gap(double fs_obj, double bks_obj) {
  if (bks_obj <= 0.0)
    throw std::invalid_argument("best-known objective must be positive");
  return (fs_obj - bks_obj) / bks_obj * 100.0;
}

double fs_rate(std::span<const RunRecord> records) {
  if (records.empty())
    throw std::invalid_argument("fs_rate needs at least one record");
  int feasible = 0;
  for (const auto& r : records) feasible += r.fs_flag ? 1 : 0;
  return 100.0 * feasible / static_cast<double>(records.size());
}

std::vector<ConvergencePoint> convergence_curve(
    const std::vector<std::vector<IncumbentEvent>>& streams,
    std::optional<double> bks) {
  if (streams.empty()) return {};
  for (const auto& s : streams)
    if (s.empty()) return {};  // some subproblem never became feasible

  auto gap_of = [&](double obj) {
    return bks ? gap(obj, *bks) : std::numeric_limits<double>::quiet_NaN();
  };

  // The curve starts once every stream has its first feasible solution.
  double t0 = 0.0;
  for (const auto& s : streams) t0 = std::max(t0, s.front().wall_seconds);

  std::vector<size_t> pos(streams.size(), 0);
  double total = 0.0;
  for (size_t i = 0; i < streams.size(); ++i) {
    while (pos[i] + 1 < streams[i].size() &&
           streams[i][pos[i] + 1].wall_seconds <= t0)
      ++pos[i];
    total += streams[i][pos[i]].objective;
  }

  std::vector<ConvergencePoint> curve;
  curve.push_back({t0, total, gap_of(total)});

  // Merge the remaining improvement events in wall-clock order.
  while (true) {
    size_t next = streams.size();
    double best_t = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < streams.size(); ++i) {
      if (pos[i] + 1 >= streams[i].size()) continue;
      double t = streams[i][pos[i] + 1].wall_seconds;
      if (t < best_t) {
        best_t = t;
        next = i;
      }
    }
    if (next == streams.size()) break;
    total -= streams[next][pos[next]].objective;
    ++pos[next];
    total += streams[next][pos[next]].objective;
    curve.push_back({best_t, total, gap_of(total)});
  }
  return curve;
}

std::optional<Solution> integrate(
    const std::vector<std::pair<Subproblem, Solution>>& subs) {
  for (const auto& [sub, sol] : subs)
    if (!sol.feasible_local) return std::nullopt;
  Solution out;
  out.source = SolutionSource::kIntegrated;
  for (const auto& [sub, sol] : subs) {
    out.routes.insert(out.routes.end(), sol.routes.begin(), sol.routes.end());
    out.objective += sol.objective;
  }
  out.feasible_local = true;
  return out;
}

RunResult run_naive(const Instance& inst, const Budget& budget,
                    std::uint64_t seed, std::optional<double> bks, int trial) {
  auto start = Clock::now();
  RunRecord rec;
  rec.instance_name = inst.name();
  rec.method = RunMethod::kNaive;
  rec.trial = trial;
  rec.seed = seed;
  rec.subproblem_count = 1;
  rec.n_variables_master = count_variables(inst.num_vertices(),
                                           inst.num_customers(), inst.vehicles());
  rec.n_variables_decomposed = rec.n_variables_master;
  rec.vr_rate_pct = 0.0;
  rec.leaf_sizes = {inst.num_customers()};
  rec.leaf_vehicles = {inst.vehicles()};

  Subproblem master;
  master.subset.resize(inst.num_customers());
  std::iota(master.subset.begin(), master.subset.end(), 1);
  master.vehicles = inst.vehicles();
  master.master = &inst;

  std::vector<IncumbentEvent> events;
  auto sol = solve_heuristic(master, budget, seed,
                             [&](double obj, double elapsed) {
                               events.push_back({elapsed, obj});
                             });

  RunResult result;
  if (sol && sol->feasible_local) {
    rec.fs_flag = true;
    rec.objective = sol->objective;
    if (bks) rec.gap_pct = gap(sol->objective, *bks);
    rec.incumbents = convergence_curve({events}, bks);
    result.solution = std::move(sol);
  } else if (sol) {
    rec.objective = sol->objective;
    result.solution = std::move(sol);
  }
  rec.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.record = std::move(rec);
  return result;
}

RunResult run_decomposed(const Instance& inst, RunMethod method,
                         const PipelineOptions& opts, std::uint64_t seed,
                         int trial) {
  if (method == RunMethod::kNaive)
    throw std::invalid_argument("run_decomposed needs dbd or abd");
  if (opts.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  auto start = Clock::now();
  RunRecord rec;
  rec.instance_name = inst.name();
  rec.method = method;
  rec.trial = trial;
  rec.seed = seed;
  rec.n_variables_master = count_variables(inst.num_vertices(),
                                           inst.num_customers(), inst.vehicles());

  DecomposeOptions dopts = opts.dec;
  dopts.method = method == RunMethod::kDbd ? CmcMethod::kDbd : CmcMethod::kAbd;
  dopts.seed = seed;
  Decomposition dec = decompose(inst, dopts);
  rec.sa_seconds = dec.sa_seconds;

  auto subs = make_subproblems(*dec.root, inst);
  // Degenerate decomposition: a single leaf is the master problem itself, so
  // it keeps the master fleet and the run reduces to the naive one.
  if (subs.size() == 1) subs[0].vehicles = inst.vehicles();
  rec.subproblem_count = static_cast<int>(subs.size());
  rec.n_variables_decomposed = 0;
  for (const auto& sub : subs) {
    const auto s = static_cast<std::int64_t>(sub.subset.size());
    rec.n_variables_decomposed += count_variables(s + 1, s, sub.vehicles);
    rec.leaf_sizes.push_back(static_cast<int>(s));
    rec.leaf_vehicles.push_back(sub.vehicles);
  }
  rec.vr_rate_pct = vr_rate(rec.n_variables_master, rec.n_variables_decomposed);
  {
    // Count fallback splits for the audit trail.
    std::vector<const PartitionNode*> stack{dec.root.get()};
    while (!stack.empty()) {
      const auto* node = stack.back();
      stack.pop_back();
      if (node->fallback) ++rec.fallback_splits;
      for (const auto& c : node->children) stack.push_back(c.get());
    }
  }

  // Solve subproblems on a pool of `jobs` workers. Each subproblem gets its
  // own seed and incumbent stream; timestamps are measured from the start of
  // the routing phase (annealing time is reported separately).
  auto routing_start = Clock::now();
  std::vector<std::optional<Solution>> solutions(subs.size());
  std::vector<std::vector<IncumbentEvent>> streams(subs.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= subs.size()) break;
      std::uint64_t sub_seed =
          seed_for_ids(combine_seed(seed, 0x50b), subs[i].subset);
      solutions[i] = solve_heuristic(
          subs[i], opts.budget, sub_seed, [&, i](double obj, double) {
            streams[i].push_back(
                {std::chrono::duration<double>(Clock::now() - routing_start)
                     .count(),
                 obj});
          });
    }
  };
  const int jobs = std::min<int>(opts.jobs, static_cast<int>(subs.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunResult result;
  std::vector<std::pair<Subproblem, Solution>> pairs;
  bool all_local = true;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (!solutions[i] || !solutions[i]->feasible_local) {
      all_local = false;
      break;
    }
    pairs.emplace_back(subs[i], *solutions[i]);
  }

  if (all_local) {
    auto integrated = integrate(pairs);
    // Strict master check: every customer exactly once, loads within Q, and
    // route count within the master's K (or the subproblem total when the
    // lenient diagnostic mode is on).
    std::vector<int> all_customers(inst.num_customers());
    std::iota(all_customers.begin(), all_customers.end(), 1);
    int k_limit = inst.vehicles();
    if (!opts.strict_k) {
      k_limit = 0;
      for (const auto& sub : subs) k_limit += sub.vehicles;
    }
    auto report = validate(*integrated, all_customers, k_limit, inst);
    rec.fs_flag = report.ok();
    rec.objective = integrated->objective;
    if (rec.fs_flag && opts.bks)
      rec.gap_pct = gap(integrated->objective, *opts.bks);
    if (rec.fs_flag) rec.incumbents = convergence_curve(streams, opts.bks);
    result.solution = std::move(integrated);
  }

  rec.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.record = std::move(rec);
  return result;
}

void write_convergence_csv(std::ostream& out,
                           std::span<const RunRecord> records) {
  out << "trial,wall_ms,objective,gap_pct\n";
  for (const auto& rec : records)
    for (const auto& p : rec.incumbents) {
      out << rec.trial << "," << p.wall_seconds * 1000.0 << "," << p.objective
          << ",";
      if (!std::isnan(p.gap_pct)) out << p.gap_pct;
      out << "\n";
    }
}

}  // namespace vrpsplit
