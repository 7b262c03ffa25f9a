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

#ifndef VRPSPLIT_TOOLS_COMMANDS_HPP_
#define VRPSPLIT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <string>

namespace vrpsplit::cli {

// Exit codes shared by all subcommands: 0 success, 1 domain failure
// (infeasibility, constraint violations, nothing to report), 2 usage or
// input errors.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

struct CommonOptions {
  std::string instance_path;
  std::string method = "abd";
  int max_vars = 100;
  std::uint64_t seed = 1;
  std::string distance = "rounded";
  std::string out_dir = "runs";
  double mu_step = 0.0;      // 0: per-method default (1 distance, 0.001 angular)
  int mu_max_steps = 1000;
  double balance_tol = 0.0;  // 0: subset max demand
  int jobs = 1;              // 0: hardware concurrency
  int sa_sweeps = 1000;
  int sa_restarts = 100;
  int vehicles = 0;          // 0: from VEHICLES field or name suffix
};

struct SolveOptions : CommonOptions {
  int trials = 10;
  double budget_secs = 0.0;        // 0: unset
  std::uint64_t budget_iters = 0;  // 0: unset; both unset -> 60 s
  std::string bks_path;
  std::string strict_k = "on";
};

struct DecomposeCmdOptions : CommonOptions {
  bool emit_lp = false;
};

struct ValidateOptions {
  std::string solution_path;
  std::string instance_path;
  int k_limit = 0;  // 0: instance vehicle count
  std::string distance = "rounded";
  int vehicles = 0;
};

struct ReportOptions {
  std::string run_dir;
};

int cmd_solve(const SolveOptions& opts);
int cmd_decompose(const DecomposeCmdOptions& opts);
int cmd_validate(const ValidateOptions& opts);
int cmd_report(const ReportOptions& opts);

}  // namespace vrpsplit::cli

#endif  // VRPSPLIT_TOOLS_COMMANDS_HPP_
