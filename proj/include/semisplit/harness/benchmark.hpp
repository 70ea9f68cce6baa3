#pragma once

#include <cstdint>
#include <optional>

#include "semisplit/games/registry.hpp"

namespace semisplit {

// Totals of flat Monte-Carlo simulations from the initial state. Dead states
// count among all states.
struct BenchmarkStats {
  std::uint64_t simulations = 0;
  std::uint64_t nodal_states = 0;
  std::uint64_t all_states = 0;
  std::uint64_t semimoves_generated = 0;
  double seconds = 0.0;

  [[nodiscard]] double nodal_states_per_sec() const { return nodal_states / seconds; }
  [[nodiscard]] double sims_per_sec() const { return simulations / seconds; }
  [[nodiscard]] double mean_nodal_per_sim() const { return static_cast<double>(nodal_states) / simulations; }
  [[nodiscard]] double mean_all_states_per_sim() const { return static_cast<double>(all_states) / simulations; }
  // Generated semimoves per visited state.
  [[nodiscard]] double mean_branching() const { return static_cast<double>(semimoves_generated) / all_states; }
};

// Runs `simulations` simulations, or as many as fit in `seconds` when
// simulations is 0. Nullopt when none ran.
std::optional<BenchmarkStats> flat_mc_benchmark(const AnyGame& game, std::uint64_t simulations, double seconds,
                                                std::uint64_t seed);

// Nodal states the plain orthodox agent computes in its first turn within
// `seconds`; at least the states of one random simulation.
std::uint64_t calibrate_fixed_budget(const GameSpec& game, double seconds, std::uint64_t seed);

}  // namespace semisplit
