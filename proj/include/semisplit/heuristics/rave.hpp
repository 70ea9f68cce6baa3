#pragma once

#include <cmath>

namespace semisplit {

inline constexpr double kDefaultRaveK = 250.0;
// AMAF mean assumed for an edge without AMAF samples (normalized scale).
inline constexpr double kNeutralAmaf = 0.5;

// All-moves-as-first statistics of one tree edge, normalized scores.
struct AmafStat {
  double count = 0.0;
  double sum = 0.0;

  void add(double score) {
    count += 1.0;
    sum += score;
  }
  [[nodiscard]] double mean() const { return count > 0.0 ? sum / count : kNeutralAmaf; }
};

inline double rave_beta(double visits, double k) { return std::sqrt(k / (3.0 * visits + k)); }

// UCB1 term on normalized means; an unvisited child is infinitely urgent.
inline double uct_value(double mean, double visits, double parent_visits, double c) {
  if (visits <= 0.0) return INFINITY;
  return mean + c * std::sqrt(std::log(parent_visits) / visits);
}

// (1 - beta) * Q + beta * AMAF + exploration, with beta = sqrt(k / (3n + k)).
inline double rave_blended_value(double mean, double visits, double parent_visits, double c, double k,
                                 double amaf_mean) {
  if (visits <= 0.0) return INFINITY;
  const double beta = rave_beta(visits, k);
  return (1.0 - beta) * mean + beta * amaf_mean + c * std::sqrt(std::log(parent_visits) / visits);
}

}  // namespace semisplit
