#pragma once

#include <vector>

namespace semisplit {

// Win rate in percent with a normal-approximation interval, clamped to
// [0, 100]. `defined` is false when one side won every play.
struct WinRate {
  double rate = 0.0;
  double low = 0.0;
  double high = 0.0;
  bool defined = false;

  friend bool operator==(const WinRate&, const WinRate&) = default;
};

// Binomial form: points per play taken as Bernoulli samples.
WinRate win_rate_ci(double points, int plays, double level = 0.95);
// Sample form over the per-play points (1, 0.5 or 0), so draws lower the
// variance. Equal to the binomial form when there are no draws.
WinRate win_rate_ci(const std::vector<double>& points, double level = 0.95);

// Two-sided standard normal quantile for a confidence level in [0, 1).
double normal_quantile(double level);

}  // namespace semisplit
