// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/fisher.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace topicgap {

namespace {

constexpr double kRelativeSlack = 1e-7;

using Table = std::array<std::uint64_t, 4>;

// Lexicographically smallest of the eight tables reachable by swapping rows,
// swapping columns and transposing; all share the same p-value.
Table Canonical(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                std::uint64_t d) {
  const Table variants[] = {
      {a, b, c, d}, {c, d, a, b}, {b, a, d, c}, {d, c, b, a},
      {a, c, b, d}, {b, d, a, c}, {c, a, d, b}, {d, b, c, a},
  };
  return *std::min_element(std::begin(variants), std::end(variants));
}

double LogChoose(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

double FisherExactTwoSided(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                           std::uint64_t d) {
  const Table t = Canonical(a, b, c, d);
  const double row1 = static_cast<double>(t[0] + t[1]);
  const double row2 = static_cast<double>(t[2] + t[3]);
  const double col1 = static_cast<double>(t[0] + t[2]);
  if (row1 + row2 == 0) return 1.0;

  // Top-left cell ranges over [lo, hi]; the other cells follow from the
  // margins.
  const auto lo = static_cast<std::uint64_t>(std::max(0.0, col1 - row2));
  const auto hi = static_cast<std::uint64_t>(std::min(row1, col1));
  std::vector<double> log_p;
  log_p.reserve(hi - lo + 1);
  for (std::uint64_t x = lo; x <= hi; ++x) {
    const double xd = static_cast<double>(x);
    log_p.push_back(LogChoose(row1, xd) + LogChoose(row2, col1 - xd));
  }
  const double observed = log_p[t[0] - lo];
  const double threshold = observed + std::log1p(kRelativeSlack);
  const double peak = *std::max_element(log_p.begin(), log_p.end());

  double total = 0.0;
  double tail = 0.0;
  for (double lp : log_p) {
    const double p = std::exp(lp - peak);
    total += p;
    if (lp <= threshold) tail += p;
  }
  return std::clamp(tail / total, 0.0, 1.0);
}

}  // namespace topicgap
