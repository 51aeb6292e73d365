// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_SVG_CHART_H_
#define TOPICGAP_SVG_CHART_H_

#include <optional>
#include <string>
#include <vector>

#include "topicgap/loess.h"

namespace topicgap {

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::optional<SmoothedSeries> smooth;
};

// A time-series chart: observed points per source, smoothed overlays with
// confidence bands, and grey bands over the years listed in
// `shaded_years` (one year wide, centred on the year).
struct ChartSpec {
  std::string title;
  std::string x_label = "year";
  std::string y_label;
  // Multiplier applied to y values for display (100 for percentages).
  double y_scale = 1.0;
  std::vector<ChartSeries> series;
  std::vector<int> shaded_years;
};

// Standalone SVG document. Shaded bands carry class="ns-band" and a
// data-year attribute; their x extent is [year - 0.5, year + 0.5] in data
// units, exposed as data-x0 / data-x1. Observed points carry class="point"
// and their unscaled values as data-x / data-y.
std::string RenderSvg(const ChartSpec& spec);

}  // namespace topicgap

#endif  // TOPICGAP_SVG_CHART_H_
