#include "semisplit/harness/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "semisplit/core/errors.hpp"

namespace semisplit {

namespace {

WinRate interval(double mean, double variance, int plays, bool one_sided, double level) {
  WinRate r;
  r.rate = 100.0 * mean;
  r.defined = !one_sided;
  const double half = normal_quantile(level) * std::sqrt(variance / plays);
  r.low = std::clamp(100.0 * (mean - half), 0.0, 100.0);
  r.high = std::clamp(100.0 * (mean + half), 0.0, 100.0);
  return r;
}

}  // namespace

double normal_quantile(double level) {
  if (level < 0.0 || level >= 1.0) throw ConfigError("confidence level must lie in [0, 1)");
  if (level == 0.0) return 0.0;
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + level / 2.0);
}

WinRate win_rate_ci(double points, int plays, double level) {
  if (plays < 1 || points < 0.0 || points > plays) throw ConfigError("win_rate_ci needs 0 <= points <= plays, plays >= 1");
  const double p = points / plays;
  return interval(p, p * (1.0 - p), plays, points == 0.0 || points == plays, level);
}

WinRate win_rate_ci(const std::vector<double>& points, double level) {
  if (points.empty()) throw ConfigError("win_rate_ci needs at least one play");
  double total = 0.0;
  for (double x : points) total += x;
  const double n = static_cast<double>(points.size());
  const double mean = total / n;
  double variance = 0.0;
  for (double x : points) variance += (x - mean) * (x - mean);
  variance /= n;
  const bool one_sided = std::all_of(points.begin(), points.end(), [](double x) { return x == 1.0; }) ||
                         std::all_of(points.begin(), points.end(), [](double x) { return x == 0.0; });
  return interval(mean, variance, static_cast<int>(points.size()), one_sided, level);
}

}  // namespace semisplit
