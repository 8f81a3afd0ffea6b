#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mfdim::cli {

struct PlotSeries {
  std::vector<std::pair<double, double>> points;
  bool connect = false;  // polyline instead of markers
  std::string color = "#1f77b4";
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  std::vector<PlotSeries> series;
};

/// Static scatter/polyline plot with a framed axis box and tick labels.
std::string render_svg(const PlotSpec& spec);

}  // namespace mfdim::cli
