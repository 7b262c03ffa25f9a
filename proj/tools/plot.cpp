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

#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vrpsplit::plot {
namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(4);
  o << v;
  return o.str();
}

}  // namespace

std::string render_convergence_svg(const std::string& title,
                                   const std::string& y_label,
                                   const std::vector<Series>& series) {
  double t_lo = std::numeric_limits<double>::infinity(), t_hi = 0.0;
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();
  for (const auto& s : series)
    for (const auto& [t, y] : s.points) {
      t_lo = std::min(t_lo, std::max(t, 1e-3));
      t_hi = std::max(t_hi, std::max(t, 1e-3));
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  if (!std::isfinite(t_lo)) {
    t_lo = 1e-3;
    t_hi = 1.0;
    y_lo = 0.0;
    y_hi = 1.0;
  }
  if (t_hi <= t_lo) t_hi = t_lo * 10;
  if (y_hi <= y_lo) y_hi = y_lo + 1;
  const double pad = 0.06 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double lx_lo = std::log10(t_lo), lx_hi = std::log10(t_hi);
  auto sx = [&](double t) {
    double lt = std::log10(std::max(t, 1e-3));
    return kLeft + (lt - lx_lo) / (lx_hi - lx_lo) * (kWidth - kLeft - kRight);
  };
  auto sy = [&](double y) {
    return kHeight - kBottom -
           (y - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

  // Axes.
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";

  // Decade ticks on the log time axis.
  for (int d = static_cast<int>(std::floor(lx_lo));
       d <= static_cast<int>(std::ceil(lx_hi)); ++d) {
    double t = std::pow(10.0, d);
    if (t < t_lo * 0.999 || t > t_hi * 1.001) continue;
    double x = sx(t);
    svg << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
        << x << "\" y2=\"" << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" << fmt(t) << "s</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    double y = y_lo + (y_hi - y_lo) * i / 4.0;
    double py = sy(y);
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kLeft
        << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kLeft - 9 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(y) << "</text>\n";
  }
  svg << "<text x=\"16\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" transform=\"rotate(-90 16 " << (kTop + kHeight - kBottom) / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">" << y_label << "</text>\n";
  svg << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
      << kHeight - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">wall-clock time (log)</text>\n";

  double legend_y = kTop + 6;
  for (const auto& s : series) {
    if (s.points.empty()) continue;
    svg << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.6\" points=\"";
    // Step-after: incumbents hold their value until improved.
    for (size_t i = 0; i < s.points.size(); ++i) {
      if (i > 0) svg << sx(s.points[i].first) << "," << sy(s.points[i - 1].second) << " ";
      svg << sx(s.points[i].first) << "," << sy(s.points[i].second) << " ";
    }
    double t_end = t_hi;
    svg << sx(t_end) << "," << sy(s.points.back().second);
    svg << "\"/>\n";
    svg << "<line x1=\"" << kWidth - 150 << "\" y1=\"" << legend_y << "\" x2=\""
        << kWidth - 126 << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << kWidth - 120 << "\" y=\"" << legend_y + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
        << "</text>\n";
    legend_y += 16;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace vrpsplit::plot
