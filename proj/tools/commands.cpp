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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "plot.hpp"
#include "vrpsplit/pipeline.hpp"

namespace fs = std::filesystem;

namespace vrpsplit::cli {
namespace {

struct Loaded {
  Instance instance;
};

std::optional<Instance> load_instance(const std::string& path,
                                      const std::string& distance,
                                      int vehicles) {
  ParseOptions popts;
  popts.distance_mode = distance == "exact" ? DistanceMode::kExactEuclidean
                                            : DistanceMode::kRoundedEuclidean;
  if (vehicles > 0) popts.vehicles_override = vehicles;
  try {
    return Instance::load(path, popts);
  } catch (const Error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void fill_decompose_options(const CommonOptions& o, vrpsplit::DecomposeOptions* d) {
  d->max_variables = o.max_vars;
  d->seed = o.seed;
  d->anneal.sweeps = o.sa_sweeps;
  d->anneal.restarts = o.sa_restarts;
  d->anneal.threads = o.jobs;
  if (o.mu_step > 0.0) {
    MuSchedule sched;
    sched.step = o.mu_step;
    sched.max_steps = o.mu_max_steps;
    d->mu_schedule = sched;
  } else if (o.mu_max_steps != 1000) {
    // Keep the per-method step, cap the walk.
    MuSchedule sched;
    sched.max_steps = o.mu_max_steps;
    sched.step = 0.0;  // resolved per method below
    d->mu_schedule = sched;
  }
  if (o.balance_tol > 0.0) d->balance_tol = o.balance_tol;
}

void resolve_schedule_step(vrpsplit::DecomposeOptions* d) {
  if (d->mu_schedule && d->mu_schedule->step <= 0.0)
    d->mu_schedule->step = default_mu_schedule(d->method).step;
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return false;
  }
  out << content;
  return true;
}

std::string pct(std::optional<double> v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", *v);
  return buf;
}

std::string secs(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", v);
  return buf;
}

struct GroupSummary {
  std::string instance;
  std::string method;
  double fs_rate_pct = 0.0;
  std::optional<double> avg_gap;
  std::optional<double> min_gap;
  double avg_sa_seconds = 0.0;
  std::int64_t n_master = 0;
  std::int64_t n_decomposed_avg = 0;
  double vr_rate_pct = 0.0;
  int trials = 0;
};

GroupSummary summarize(const std::vector<RunRecord>& records) {
  GroupSummary g;
  g.instance = records.front().instance_name;
  g.method = to_string(records.front().method);
  g.trials = static_cast<int>(records.size());
  g.fs_rate_pct = fs_rate(records);
  g.n_master = records.front().n_variables_master;
  double sa = 0.0, ndec = 0.0, vr = 0.0;
  double gap_sum = 0.0;
  int gap_count = 0;
  for (const auto& r : records) {
    sa += r.sa_seconds;
    ndec += static_cast<double>(r.n_variables_decomposed);
    vr += r.vr_rate_pct;
    if (r.gap_pct) {
      gap_sum += *r.gap_pct;
      ++gap_count;
      g.min_gap = g.min_gap ? std::min(*g.min_gap, *r.gap_pct) : *r.gap_pct;
    }
  }
  g.avg_sa_seconds = sa / g.trials;
  g.n_decomposed_avg = static_cast<std::int64_t>(ndec / g.trials + 0.5);
  g.vr_rate_pct = vr / g.trials;
  // Averaged over feasible trials only; infeasible ones carry no gap.
  if (gap_count > 0) g.avg_gap = gap_sum / gap_count;
  return g;
}

void print_summaries(const std::vector<GroupSummary>& groups, std::ostream& out) {
  out << "\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-8s %-14s %8s %10s %10s %9s\n", "method",
                "instance", "FS rate", "avg gap", "min gap", "SA time");
  out << buf;
  for (const auto& g : groups) {
    std::snprintf(buf, sizeof(buf), "%-8s %-14s %7.0f%% %10s %10s %9s\n",
                  g.method.c_str(), g.instance.c_str(), g.fs_rate_pct,
                  pct(g.avg_gap).c_str(), pct(g.min_gap).c_str(),
                  secs(g.avg_sa_seconds).c_str());
    out << buf;
  }
  out << "\n";
  std::snprintf(buf, sizeof(buf), "%-14s %-8s %14s %14s %9s\n", "instance",
                "method", "N_vars", "N_vars(dec)", "VR rate");
  out << buf;
  for (const auto& g : groups) {
    std::snprintf(buf, sizeof(buf), "%-14s %-8s %14lld %14lld %8.2f%%\n",
                  g.instance.c_str(), g.method.c_str(),
                  static_cast<long long>(g.n_master),
                  static_cast<long long>(g.n_decomposed_avg), g.vr_rate_pct);
    out << buf;
  }
}

void write_summary_tsv(const fs::path& path,
                       const std::vector<GroupSummary>& groups) {
  std::ofstream out(path);
  out << "instance\tmethod\ttrials\tfs_rate_pct\tavg_gap_pct\tmin_gap_pct"
         "\tavg_sa_seconds\tn_variables_master\tn_variables_decomposed_avg"
         "\tvr_rate_pct\n";
  for (const auto& g : groups) {
    out << g.instance << "\t" << g.method << "\t" << g.trials << "\t"
        << g.fs_rate_pct << "\t";
    if (g.avg_gap) out << *g.avg_gap;
    out << "\t";
    if (g.min_gap) out << *g.min_gap;
    out << "\t" << g.avg_sa_seconds << "\t" << g.n_master << "\t"
        << g.n_decomposed_avg << "\t" << g.vr_rate_pct << "\n";
  }
}

std::string method_color(const std::string& method) {
  if (method == "naive") return "#7f7f7f";
  if (method == "dbd") return "#d62728";
  return "#1f77b4";
}

}  // namespace

int cmd_solve(const SolveOptions& opts) {
  auto inst = load_instance(opts.instance_path, opts.distance, opts.vehicles);
  if (!inst) return kUsageError;

  RunMethod method;
  try {
    method = run_method_from_string(opts.method);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  Budget budget;
  if (opts.budget_iters > 0) budget.rounds = opts.budget_iters;
  if (opts.budget_secs > 0.0) budget.seconds = opts.budget_secs;
  if (!budget.rounds && !budget.seconds) budget.seconds = 60.0;

  std::optional<double> bks;
  try {
    bks = opts.bks_path.empty()
              ? static_cast<double>(load_bks(inst->name()).bks_objective)
              : static_cast<double>(
                    load_bks(inst->name(), opts.bks_path).bks_objective);
  } catch (const LookupError&) {
    std::cerr << "note: no best-known objective for '" << inst->name()
              << "'; gaps will be omitted\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  PipelineOptions popts;
  popts.budget = budget;
  popts.jobs = opts.jobs > 0
                   ? opts.jobs
                   : static_cast<int>(std::thread::hardware_concurrency());
  popts.strict_k = opts.strict_k != "off";
  popts.bks = bks;
  fill_decompose_options(opts, &popts.dec);
  popts.dec.method =
      method == RunMethod::kDbd ? CmcMethod::kDbd : CmcMethod::kAbd;
  resolve_schedule_step(&popts.dec);

  fs::create_directories(opts.out_dir);
  std::vector<RunRecord> records;
  std::vector<std::optional<Solution>> solutions;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const std::uint64_t trial_seed = opts.seed + static_cast<std::uint64_t>(trial);
    RunResult result =
        method == RunMethod::kNaive
            ? run_naive(*inst, budget, trial_seed, bks, trial)
            : run_decomposed(*inst, method, popts, trial_seed, trial);
    const RunRecord& rec = result.record;
    std::printf("trial %2d: fs=%s objective=%s gap=%s sa=%s subproblems=%d\n",
                trial, rec.fs_flag ? "yes" : "no",
                rec.objective ? std::to_string(*rec.objective).c_str() : "-",
                pct(rec.gap_pct).c_str(), secs(rec.sa_seconds).c_str(),
                rec.subproblem_count);
    std::fflush(stdout);

    std::ostringstream stem;
    stem << inst->name() << "_" << to_string(method) << "_t" << trial;
    if (!write_file(fs::path(opts.out_dir) / (stem.str() + ".json"),
                    rec.to_json().dump(2) + "\n"))
      return kUsageError;
    if (result.solution && rec.fs_flag)
      write_file(fs::path(opts.out_dir) / (stem.str() + ".sol"),
                 to_solution_text(*result.solution));
    records.push_back(std::move(result.record));
    solutions.push_back(std::move(result.solution));
  }

  std::ostringstream csv;
  write_convergence_csv(csv, records);
  write_file(fs::path(opts.out_dir) /
                 (inst->name() + "_" + to_string(method) + "_convergence.csv"),
             csv.str());

  std::vector<GroupSummary> groups{summarize(records)};
  print_summaries(groups, std::cout);
  write_summary_tsv(fs::path(opts.out_dir) /
                        (inst->name() + "_" + to_string(method) + "_summary.tsv"),
                    groups);

  const bool any_fs =
      std::any_of(records.begin(), records.end(),
                  [](const RunRecord& r) { return r.fs_flag; });
  return any_fs ? kOk : kDomainFailure;
}

int cmd_decompose(const DecomposeCmdOptions& opts) {
  auto inst = load_instance(opts.instance_path, opts.distance, opts.vehicles);
  if (!inst) return kUsageError;
  if (opts.method != "dbd" && opts.method != "abd") {
    std::cerr << "error: decompose needs --method dbd or abd\n";
    return kUsageError;
  }

  vrpsplit::DecomposeOptions dopts;
  fill_decompose_options(opts, &dopts);
  dopts.method = opts.method == "dbd" ? CmcMethod::kDbd : CmcMethod::kAbd;
  resolve_schedule_step(&dopts);

  Decomposition dec = decompose(*inst, dopts);
  auto subs = make_subproblems(*dec.root, *inst);

  const std::int64_t n_master = count_variables(
      inst->num_vertices(), inst->num_customers(), inst->vehicles());
  std::int64_t n_dec = 0;
  for (const auto& sub : subs) {
    auto s = static_cast<std::int64_t>(sub.subset.size());
    n_dec += count_variables(s + 1, s, sub.vehicles);
  }

  fs::create_directories(opts.out_dir);
  std::ostringstream stem;
  stem << inst->name() << "_" << opts.method;
  if (!write_file(fs::path(opts.out_dir) / (stem.str() + "_partition.json"),
                  dec.to_json().dump(2) + "\n"))
    return kUsageError;

  std::printf("instance %s: %d customers, K=%d, Q=%d, CUR=%.4f\n",
              inst->name().c_str(), inst->num_customers(), inst->vehicles(),
              inst->capacity(), inst->cur());
  std::printf("subproblems: %zu\n", subs.size());
  for (size_t i = 0; i < subs.size(); ++i)
    std::printf("  #%zu: %zu customers, K_sub=%d, demand=%lld\n", i + 1,
                subs[i].subset.size(), subs[i].vehicles,
                static_cast<long long>(subs[i].total_demand()));
  std::printf("N_variables: master=%lld decomposed=%lld\n",
              static_cast<long long>(n_master), static_cast<long long>(n_dec));
  std::printf("VR rate: %.2f%%\n", vr_rate(n_master, n_dec));
  std::printf("SA time: %s\n", secs(dec.sa_seconds).c_str());

  if (opts.emit_lp) {
    for (size_t i = 0; i < subs.size(); ++i) {
      std::ostringstream name;
      name << stem.str() << "_sub" << (i + 1) << ".lp";
      if (!write_file(fs::path(opts.out_dir) / name.str(), emit_milp(subs[i])))
        return kUsageError;
    }
    std::printf("wrote %zu LP files to %s\n", subs.size(), opts.out_dir.c_str());
  }
  return kOk;
}

int cmd_validate(const ValidateOptions& opts) {
  auto inst = load_instance(opts.instance_path, opts.distance, opts.vehicles);
  if (!inst) return kUsageError;

  std::ifstream in(opts.solution_path);
  if (!in) {
    std::cerr << "error: cannot open solution file: " << opts.solution_path
              << "\n";
    return kUsageError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  Solution sol;
  double declared = 0.0;
  try {
    sol = parse_solution_text(buf.str(), *inst, &declared);
  } catch (const ParseError& e) {
    std::cerr << "error: " << opts.solution_path << ": " << e.what() << "\n";
    return kUsageError;
  }

  std::vector<int> customers(inst->num_customers());
  for (int c = 1; c <= inst->num_customers(); ++c) customers[c - 1] = c;
  const int k_limit = opts.k_limit > 0 ? opts.k_limit : inst->vehicles();
  auto report = validate(sol, customers, k_limit, *inst);

  std::printf("%s\n", report.describe().c_str());
  for (size_t r = 0; r < sol.routes.size(); ++r)
    if (sol.routes[r].load > inst->capacity())
      std::printf("  route #%zu: load %lld exceeds capacity %d\n", r + 1,
                  static_cast<long long>(sol.routes[r].load), inst->capacity());
  std::printf("routes: %zu (limit %d)\n", sol.routes.size(), k_limit);
  std::printf("objective (recomputed): %.10g\n", sol.objective);
  if (!std::isnan(declared) && std::abs(declared - sol.objective) > 1e-6)
    std::printf("note: declared cost %.10g differs from recomputed %.10g\n",
                declared, sol.objective);
  return report.ok() ? kOk : kDomainFailure;
}

int cmd_report(const ReportOptions& opts) {
  std::map<std::pair<std::string, std::string>, std::vector<RunRecord>> groups;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(opts.run_dir, ec)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    if (!in) continue;
    try {
      auto j = nlohmann::json::parse(in);
      RunRecord rec = RunRecord::from_json(j);
      groups[{rec.instance_name, to_string(rec.method)}].push_back(std::move(rec));
    } catch (const std::exception&) {
      continue;  // not a run record
    }
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << opts.run_dir << "\n";
    return kUsageError;
  }
  if (groups.empty()) {
    std::cerr << "no runs found in " << opts.run_dir << "\n";
    return kDomainFailure;
  }

  std::vector<GroupSummary> summaries;
  for (auto& [key, records] : groups) {
    std::sort(records.begin(), records.end(),
              [](const RunRecord& a, const RunRecord& b) {
                return a.trial < b.trial;
              });
    summaries.push_back(summarize(records));
  }
  print_summaries(summaries, std::cout);
  write_summary_tsv(fs::path(opts.run_dir) / "summary.tsv", summaries);

  // Regenerate per-(instance, method) convergence CSVs and pick the best
  // feasible trial of each method for the per-instance chart.
  std::map<std::string, std::vector<std::pair<std::string, const RunRecord*>>>
      chart_inputs;
  for (const auto& [key, records] : groups) {
    std::ostringstream csv;
    write_convergence_csv(csv, records);
    write_file(fs::path(opts.run_dir) /
                   (key.first + "_" + key.second + "_convergence.csv"),
               csv.str());

    const RunRecord* best = nullptr;
    for (const auto& r : records) {
      if (!r.fs_flag || r.incumbents.empty() || !r.objective) continue;
      if (!best || *r.objective < *best->objective) best = &r;
    }
    if (best) chart_inputs[key.first].push_back({key.second, best});
  }
  for (const auto& [instance, bests] : chart_inputs) {
    bool use_gap = true;
    for (const auto& [method, rec] : bests)
      for (const auto& p : rec->incumbents) use_gap &= !std::isnan(p.gap_pct);
    std::vector<plot::Series> series;
    for (const auto& [method, rec] : bests) {
      plot::Series s;
      s.label = method;
      s.color = method_color(method);
      for (const auto& p : rec->incumbents)
        s.points.push_back({p.wall_seconds, use_gap ? p.gap_pct : p.objective});
      series.push_back(std::move(s));
    }
    auto svg = plot::render_convergence_svg(
        instance, use_gap ? "gap to best known (%)" : "objective", series);
    write_file(fs::path(opts.run_dir) / (instance + "_convergence.svg"), svg);
  }
  std::printf("wrote summary.tsv and convergence CSV/SVG files to %s\n",
              opts.run_dir.c_str());
  return kOk;
}

}  // namespace vrpsplit::cli
