// Apache License, Version 2.0, refer to LICENSE.txt
//
// Local linear regression (LOESS, degree 1, tricube weights, no robustness
// iterations) with pointwise confidence bands.
//
// Each local fit uses the q = ceil(span * n) nearest observations; the
// bandwidth is the distance to the q-th nearest, so that neighbour itself
// gets weight zero. The smoother is linear, fitted(x) = sum_i l_i(x) y_i,
// and the band is
//
//   fitted(x) ± t_{(1+level)/2, df} * sigma * ||l(x)||
//
// with sigma^2 = RSS / delta1, delta1 = tr((I-L)'(I-L)),
// delta2 = tr(((I-L)'(I-L))^2) and df = delta1^2 / delta2, L being the
// smoother matrix at the observed abscissae.

#ifndef TOPICGAP_LOESS_H_
#define TOPICGAP_LOESS_H_

#include <span>
#include <vector>

namespace topicgap {

struct SmoothConfig {
  double span = 0.75;
  // Local polynomial degree; only 1 is supported.
  int degree = 1;
  double ci_level = 0.95;
  // Evaluate on a grid `densify_factor` times finer than the observations.
  bool densify = false;
  int densify_factor = 10;
};

struct SmoothedSeries {
  std::vector<double> x;
  std::vector<double> fitted;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> std_error;
};

// Throws std::invalid_argument for fewer than 3 points, repeated x values,
// mismatched lengths, or a span too small for a local line. Evaluates at
// the sorted observed x (or the dense grid) unless `eval_x` is given.
SmoothedSeries LoessFit(std::span<const double> x, std::span<const double> y,
                        const SmoothConfig& config = {},
                        std::span<const double> eval_x = {});

// Operator weights l_i(x0) of the local fit at x0 over (x sorted ascending).
std::vector<double> LoessWeights(std::span<const double> x, double x0,
                                 const SmoothConfig& config);

}  // namespace topicgap

#endif  // TOPICGAP_LOESS_H_
