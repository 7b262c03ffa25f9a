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

#ifndef VRPSPLIT_TOOLS_PLOT_HPP_
#define VRPSPLIT_TOOLS_PLOT_HPP_

#include <string>
#include <vector>

namespace vrpsplit::plot {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;  // (seconds, value)
};

// Step-after convergence chart with a log-scaled time axis. Self-contained
// SVG, no external tooling required.
std::string render_convergence_svg(const std::string& title,
                                   const std::string& y_label,
                                   const std::vector<Series>& series);

}  // namespace vrpsplit::plot

#endif  // VRPSPLIT_TOOLS_PLOT_HPP_
