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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "vrpsplit/errors.hpp"

namespace cli = vrpsplit::cli;

namespace {

void add_common_options(CLI::App* cmd, cli::CommonOptions* opts,
                        bool with_method = true) {
  cmd->add_option("instance", opts->instance_path, "CVRPLIB .vrp instance file")
      ->required();
  if (with_method)
    cmd->add_option("--method", opts->method, "Decomposition method")
        ->check(CLI::IsMember({"dbd", "abd"}))
        ->capture_default_str();
  cmd->add_option("--max-vars", opts->max_vars,
                  "Largest customer subset solved without splitting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Master random seed")
      ->capture_default_str();
  cmd->add_option("--distance", opts->distance,
                  "Travel cost convention for routing objectives")
      ->check(CLI::IsMember({"rounded", "exact"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--mu-step", opts->mu_step,
                  "Penalty-weight increment (0: 1 for dbd, 0.001 for abd)")
      ->capture_default_str();
  cmd->add_option("--mu-max-steps", opts->mu_max_steps,
                  "Give up the penalty search after this many steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--balance-tol", opts->balance_tol,
                  "Demand balance tolerance (0: subset max demand)")
      ->capture_default_str();
  cmd->add_option("--jobs", opts->jobs,
                  "Worker threads for subproblems and annealing restarts "
                  "(0: all cores)")
      ->capture_default_str();
  cmd->add_option("--sa-sweeps", opts->sa_sweeps,
                  "Annealing sweeps per restart")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--sa-restarts", opts->sa_restarts,
                  "Annealing restarts per penalty step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--vehicles", opts->vehicles,
                  "Vehicle count override (0: VEHICLES field or name suffix)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vrpsplit: capacitated vehicle routing with annealed max-cut "
      "search-space decomposition"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read options from a TOML-style key/value file "
                 "(sections per subcommand; flags override)");
  app.get_formatter()->column_width(34);

  cli::SolveOptions solve_opts;
  auto* solve = app.add_subcommand(
      "solve", "Run trials of the naive or decomposed pipeline");
  add_common_options(solve, &solve_opts, false);
  solve->add_option("--method", solve_opts.method,
                    "naive (direct solve), dbd, or abd")
      ->check(CLI::IsMember({"naive", "dbd", "abd"}))
      ->capture_default_str();
  solve->add_option("--trials", solve_opts.trials, "Independent trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--budget-secs", solve_opts.budget_secs,
                    "Wall-clock budget per subproblem (naive: total); "
                    "60 when no budget flag is given")
      ->capture_default_str();
  solve->add_option("--budget-iters", solve_opts.budget_iters,
                    "Improvement-round budget per subproblem (deterministic)")
      ->capture_default_str();
  solve->add_option("--bks", solve_opts.bks_path,
                    "Registry file of best-known objectives (bks.tsv format)")
      ->capture_default_str();
  solve->add_option("--strict-k", solve_opts.strict_k,
                    "Master feasibility requires route count <= K")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();

  cli::DecomposeCmdOptions dec_opts;
  auto* dec = app.add_subcommand(
      "decompose", "Partition the customer set without solving");
  add_common_options(dec, &dec_opts);
  dec->add_flag("--emit-lp", dec_opts.emit_lp,
                "Also write one LP-format model per subproblem");

  cli::ValidateOptions val_opts;
  auto* val = app.add_subcommand("validate",
                                 "Check a solution file against an instance");
  val->add_option("solution", val_opts.solution_path, "Solution text file")
      ->required();
  val->add_option("instance", val_opts.instance_path, "CVRPLIB .vrp file")
      ->required();
  val->add_option("--k-limit", val_opts.k_limit,
                  "Vehicle limit (0: instance vehicle count)")
      ->capture_default_str();
  val->add_option("--distance", val_opts.distance, "Travel cost convention")
      ->check(CLI::IsMember({"rounded", "exact"}))
      ->capture_default_str();
  val->add_option("--vehicles", val_opts.vehicles, "Vehicle count override")
      ->capture_default_str();

  cli::ReportOptions rep_opts;
  auto* rep = app.add_subcommand(
      "report", "Summarize a directory of run records (tables, CSV, SVG)");
  rep->add_option("run_dir", rep_opts.run_dir, "Directory of *.json records")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  try {
    if (solve->parsed()) return cli::cmd_solve(solve_opts);
    if (dec->parsed()) return cli::cmd_decompose(dec_opts);
    if (val->parsed()) return cli::cmd_validate(val_opts);
    if (rep->parsed()) return cli::cmd_report(rep_opts);
  } catch (const vrpsplit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
