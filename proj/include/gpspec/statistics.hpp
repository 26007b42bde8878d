#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gpspec {

// Linear-interpolation quantile (numpy's default) of ascending data, p in [0, 1].
double quantile_sorted(std::span<const double> sorted, double p);

// Box-plot ready summary. The box spans 25 percentile points either side of
// the mean's percentile rank; whiskers are min and max; outliers lie more
// than 1.5 IQR outside [q25, q75].
struct DistributionSummary {
  std::size_t count = 0;
  double min = 0, p5 = 0, q25 = 0, median = 0, q75 = 0, p95 = 0, max = 0;
  double mean = 0;
  double box_low = 0, box_high = 0;
  std::vector<double> outliers;
};

// Throws ArgumentError on empty input.
DistributionSummary summarize(std::span<const double> values);

}  // namespace gpspec
