// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/svg_chart.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace topicgap {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr const char* kPalette[] = {"#d95f02", "#1b9e77", "#7570b3",
                                    "#e7298a"};

std::string XmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Rounds the data range outwards to a "nice" step.
double NiceStep(double range) {
  if (range <= 0) return 1.0;
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string RenderSvg(const ChartSpec& spec) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = 0.0;
  double y_max = -std::numeric_limits<double>::infinity();
  auto extend_y = [&](double v) {
    if (std::isfinite(v)) {
      y_min = std::min(y_min, v * spec.y_scale);
      y_max = std::max(y_max, v * spec.y_scale);
    }
  };
  for (const auto& s : spec.series) {
    for (double v : s.x) {
      x_min = std::min(x_min, v);
      x_max = std::max(x_max, v);
    }
    for (double v : s.y) extend_y(v);
    if (s.smooth) {
      for (double v : s.smooth->lower) extend_y(v);
      for (double v : s.smooth->upper) extend_y(v);
    }
  }
  for (int year : spec.shaded_years) {
    x_min = std::min(x_min, year - 0.5);
    x_max = std::max(x_max, year + 0.5);
  }
  if (!std::isfinite(x_min)) {
    x_min = 0;
    x_max = 1;
  }
  if (!std::isfinite(y_max) || y_max <= y_min) y_max = y_min + 1.0;
  x_min -= 0.5;
  x_max += 0.5;
  const double y_step = NiceStep(y_max - y_min);
  y_max = std::ceil(y_max / y_step) * y_step;
  y_min = std::floor(y_min / y_step) * y_step;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) {
    return kTop + plot_h - (y * spec.y_scale - y_min) / (y_max - y_min) * plot_h;
  };
  auto py_scaled = [&](double y) {
    return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  svg += fmt::format("<title>{}</title>\n", XmlEscape(spec.title));
  svg += fmt::format(
      "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
      kWidth, kHeight);

  svg += "<g id=\"shading\">\n";
  for (int year : spec.shaded_years) {
    const double x0 = std::max(px(year - 0.5), kLeft);
    const double x1 = std::min(px(year + 0.5), kLeft + plot_w);
    svg += fmt::format(
        "<rect class=\"ns-band\" data-year=\"{}\" data-x0=\"{}\" "
        "data-x1=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" "
        "height=\"{:.2f}\" fill=\"#cccccc\" fill-opacity=\"0.5\"/>\n",
        year, year - 0.5, year + 0.5, x0, kTop, x1 - x0, plot_h);
  }
  svg += "</g>\n";

  // Axes, ticks and grid.
  svg += "<g id=\"axes\" stroke=\"#333333\">\n";
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>\n",
      kLeft, kTop + plot_h, kLeft + plot_w);
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n",
      kLeft, kTop, kTop + plot_h);
  svg += "</g>\n<g id=\"ticks\" fill=\"#333333\">\n";
  const int first_tick = static_cast<int>(std::ceil(x_min));
  const int last_tick = static_cast<int>(std::floor(x_max));
  const int x_every = std::max(1, (last_tick - first_tick) / 12 + 1);
  for (int t = first_tick; t <= last_tick; t += x_every) {
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
        px(t), kTop + plot_h + 18, t);
  }
  for (double v = y_min; v <= y_max + y_step * 1e-9; v += y_step) {
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
        "stroke=\"#eeeeee\"/>\n"
        "<text x=\"{3:.2f}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:g}</text>\n",
        kLeft, py_scaled(v), kLeft + plot_w, kLeft - 6, py_scaled(v) + 4, v);
  }
  svg += "</g>\n";
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
      kLeft + plot_w / 2, kHeight - 10, XmlEscape(spec.x_label));
  svg += fmt::format(
      "<text x=\"16\" y=\"{0:.2f}\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 16 {0:.2f})\">{1}</text>\n",
      kTop + plot_h / 2, XmlEscape(spec.y_label));
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      "{}</text>\n",
      kLeft + plot_w / 2, XmlEscape(spec.title));

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const ChartSeries& s = spec.series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    svg += fmt::format("<g class=\"series\" data-name=\"{}\">\n",
                       XmlEscape(s.name));
    if (s.smooth && !s.smooth->x.empty()) {
      const SmoothedSeries& sm = *s.smooth;
      std::string band;
      for (std::size_t k = 0; k < sm.x.size(); ++k) {
        band += fmt::format("{:.2f},{:.2f} ", px(sm.x[k]), py(sm.upper[k]));
      }
      for (std::size_t k = sm.x.size(); k-- > 0;) {
        band += fmt::format("{:.2f},{:.2f} ", px(sm.x[k]), py(sm.lower[k]));
      }
      band.pop_back();
      svg += fmt::format(
          "<polygon class=\"ci-band\" points=\"{}\" fill=\"#999999\" "
          "fill-opacity=\"0.3\" stroke=\"none\"/>\n",
          band);
      std::string line;
      for (std::size_t k = 0; k < sm.x.size(); ++k) {
        line += fmt::format("{:.2f},{:.2f} ", px(sm.x[k]), py(sm.fitted[k]));
      }
      line.pop_back();
      svg += fmt::format(
          "<polyline class=\"smooth\" points=\"{}\" fill=\"none\" "
          "stroke=\"{}\" stroke-width=\"2\"/>\n",
          line, color);
    }
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      svg += fmt::format(
          "<circle class=\"point\" data-x=\"{}\" data-y=\"{}\" cx=\"{:.2f}\" "
          "cy=\"{:.2f}\" r=\"3.5\" fill=\"{}\"/>\n",
          s.x[k], s.y[k], px(s.x[k]), py(s.y[k]), color);
    }
    const double ly = kTop + 14 + 20.0 * i;
    svg += fmt::format(
        "<rect x=\"{0:.2f}\" y=\"{1:.2f}\" width=\"12\" height=\"12\" "
        "fill=\"{2}\"/>\n<text x=\"{3:.2f}\" y=\"{4:.2f}\">{5}</text>\n",
        kLeft + plot_w + 16, ly - 10, color, kLeft + plot_w + 34, ly,
        XmlEscape(s.name));
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace topicgap
