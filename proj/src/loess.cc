// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/loess.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "topicgap/log.h"

namespace topicgap {

namespace {

std::size_t NeighbourCount(std::size_t n, double span) {
  const auto q = static_cast<std::size_t>(std::ceil(span * n - 1e-9));
  return std::min(q, n);
}

double Tricube(double u) {
  if (u >= 1.0) return 0.0;
  const double t = 1.0 - u * u * u;
  return t * t * t;
}

void CheckConfig(std::size_t n, const SmoothConfig& config) {
  if (config.degree != 1) {
    throw std::invalid_argument("only local linear fits (degree 1) supported");
  }
  if (!(config.span > 0.0 && config.span <= 1.0)) {
    throw std::invalid_argument("span must lie in (0, 1]");
  }
  if (!(config.ci_level > 0.0 && config.ci_level < 1.0)) {
    throw std::invalid_argument("ci_level must lie in (0, 1)");
  }
  if (NeighbourCount(n, config.span) < static_cast<std::size_t>(config.degree + 2)) {
    throw std::invalid_argument("span too small: local fits need >= 3 points");
  }
}

}  // namespace

std::vector<double> LoessWeights(std::span<const double> x, double x0,
                                 const SmoothConfig& config) {
  const std::size_t n = x.size();
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = std::abs(x[i] - x0);
  std::vector<double> sorted = dist;
  const std::size_t q = NeighbourCount(n, config.span);
  std::nth_element(sorted.begin(), sorted.begin() + (q - 1), sorted.end());
  const double bandwidth = sorted[q - 1];

  std::vector<double> w(n, 0.0);
  if (bandwidth > 0.0) {
    for (std::size_t i = 0; i < n; ++i) w[i] = Tricube(dist[i] / bandwidth);
  }
  const double sum_w = std::accumulate(w.begin(), w.end(), 0.0);
  if (sum_w <= 0.0) {
    // Window collapsed onto x0.
    for (std::size_t i = 0; i < n; ++i) w[i] = dist[i] == 0.0 ? 1.0 : 0.0;
  }

  // Coordinates are taken relative to x0.
  double sw = 0.0, swu = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sw += w[i];
    swu += w[i] * (x[i] - x0);
  }
  const double mean_u = swu / sw;
  double suu = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = (x[i] - x0) - mean_u;
    suu += w[i] * c * c;
  }

  std::vector<double> l(n, 0.0);
  const double scale = std::max(1.0, std::abs(x0 + mean_u));
  if (suu <= 1e-12 * sw * scale * scale) {
    Warn("degenerate local design at x={}; using the weighted mean", x0);
    for (std::size_t i = 0; i < n; ++i) l[i] = w[i] / sw;
    return l;
  }
  const double slope_factor = -mean_u / suu;
  for (std::size_t i = 0; i < n; ++i) {
    l[i] = w[i] / sw + slope_factor * w[i] * ((x[i] - x0) - mean_u);
  }
  return l;
}

SmoothedSeries LoessFit(std::span<const double> x_in,
                        std::span<const double> y_in,
                        const SmoothConfig& config,
                        std::span<const double> eval_x) {
  const std::size_t n = x_in.size();
  if (y_in.size() != n) throw std::invalid_argument("x and y differ in length");
  if (n < 3) throw std::invalid_argument("LOESS needs at least 3 points");
  CheckConfig(n, config);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x_in[a] < x_in[b]; });
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = x_in[order[i]];
    y[i] = y_in[order[i]];
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] == x[i - 1]) throw std::invalid_argument("x values must be distinct");
  }

  // Smoother matrix at the observations; residual variance and lookup
  // degrees of freedom come from I - L.
  std::vector<std::vector<double>> smoother(n);
  for (std::size_t i = 0; i < n; ++i) smoother[i] = LoessWeights(x, x[i], config);
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double fit = 0.0;
    for (std::size_t j = 0; j < n; ++j) fit += smoother[i][j] * y[j];
    rss += (y[i] - fit) * (y[i] - fit);
  }
  // M = (I - L)'(I - L)
  std::vector<double> m(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double ia = (i == a ? 1.0 : 0.0) - smoother[i][a];
        const double ib = (i == b ? 1.0 : 0.0) - smoother[i][b];
        s += ia * ib;
      }
      m[a * n + b] = s;
    }
  }
  double delta1 = 0.0, delta2 = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    delta1 += m[a * n + a];
    for (std::size_t b = 0; b < n; ++b) delta2 += m[a * n + b] * m[b * n + a];
  }
  double sigma = 0.0;
  double t_quantile = 0.0;
  if (delta1 > 1e-12 && delta2 > 0.0) {
    sigma = std::sqrt(rss / delta1);
    const double df = delta1 * delta1 / delta2;
    boost::math::students_t dist(df);
    t_quantile = boost::math::quantile(dist, 0.5 + config.ci_level / 2.0);
  } else {
    Warn("smoother interpolates the data; confidence band collapsed");
  }

  SmoothedSeries out;
  if (!eval_x.empty()) {
    out.x.assign(eval_x.begin(), eval_x.end());
  } else if (config.densify && config.densify_factor > 1) {
    const std::size_t steps = (n - 1) * config.densify_factor;
    for (std::size_t s = 0; s <= steps; ++s) {
      out.x.push_back(x.front() + (x.back() - x.front()) * s / steps);
    }
  } else {
    out.x = x;
  }
  for (double x0 : out.x) {
    const auto l = LoessWeights(x, x0, config);
    double fit = 0.0, norm2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      fit += l[j] * y[j];
      norm2 += l[j] * l[j];
    }
    const double se = sigma * std::sqrt(norm2);
    out.fitted.push_back(fit);
    out.std_error.push_back(se);
    out.lower.push_back(fit - t_quantile * se);
    out.upper.push_back(fit + t_quantile * se);
  }
  return out;
}

}  // namespace topicgap
