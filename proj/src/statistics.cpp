#include "gpspec/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gpspec/errors.hpp"

namespace gpspec {

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw ArgumentError("quantile of empty data");
  p = std::clamp(p, 0.0, 1.0);
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

DistributionSummary summarize(std::span<const double> values) {
  if (values.empty()) throw ArgumentError("cannot summarize empty data");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());

  DistributionSummary s;
  s.count = v.size();
  s.min = v.front();
  s.max = v.back();
  s.p5 = quantile_sorted(v, 0.05);
  s.q25 = quantile_sorted(v, 0.25);
  s.median = quantile_sorted(v, 0.50);
  s.q75 = quantile_sorted(v, 0.75);
  s.p95 = quantile_sorted(v, 0.95);
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());

  const auto below = std::upper_bound(v.begin(), v.end(), s.mean) - v.begin();
  const double mean_rank = static_cast<double>(below) / static_cast<double>(v.size());
  s.box_low = quantile_sorted(v, mean_rank - 0.25);
  s.box_high = quantile_sorted(v, mean_rank + 0.25);

  const double iqr = s.q75 - s.q25;
  for (double x : v)
    if (x < s.q25 - 1.5 * iqr || x > s.q75 + 1.5 * iqr) s.outliers.push_back(x);
  return s;
}

}  // namespace gpspec
