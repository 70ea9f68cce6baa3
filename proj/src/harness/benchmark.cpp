#include "semisplit/harness/benchmark.hpp"

#include <algorithm>
#include <chrono>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/search/agent.hpp"

namespace semisplit {

std::optional<BenchmarkStats> flat_mc_benchmark(const AnyGame& game, std::uint64_t simulations, double seconds,
                                                std::uint64_t seed) {
  if (simulations == 0 && !(seconds > 0.0)) return std::nullopt;
  using Clock = std::chrono::steady_clock;
  return visit_game(game, [&](const auto& g) -> std::optional<BenchmarkStats> {
    Rng rng(seed);
    SimCounters counters;
    SemimoveBuffers buffers;
    const auto start_state = g.initial_state();
    const auto started = Clock::now();
    const auto deadline = started + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    std::uint64_t done = 0;
    while (simulations > 0 ? done < simulations : Clock::now() < deadline) {
      if (!semisplit_simulation(g, start_state, rng, counters, buffers)) {
        throw RuntimeFailure("the initial state of " + g.name() + " is dead");
      }
      ++done;
    }
    if (done == 0) return std::nullopt;
    BenchmarkStats stats;
    stats.simulations = done;
    stats.nodal_states = counters.nodal_states;
    stats.all_states = counters.all_states;
    stats.semimoves_generated = counters.semimoves_generated;
    stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return stats;
  });
}

std::uint64_t calibrate_fixed_budget(const GameSpec& spec, double seconds, std::uint64_t seed) {
  if (!(seconds > 0.0)) throw ConfigError("calibration needs a positive number of seconds");
  GameSpec orthodox = spec;
  orthodox.strategy = Strategy::kOrthodox;
  return visit_game(make_game(orthodox), [&](const auto& g) -> std::uint64_t {
    using G = std::decay_t<decltype(g)>;
    Agent<G> agent(g, AgentConfig{}, seed);
    Budget budget(BudgetSpec::timed(seconds));
    agent.choose_move(g.initial_state(), budget);
    if (agent.last_turn().iterations > 0) return std::max<std::uint64_t>(agent.last_turn().nodal_states, 1);
    Rng rng(seed);
    SimCounters counters;
    semisplit_simulation(g, g.initial_state(), rng, &counters);
    return std::max<std::uint64_t>(counters.nodal_states, 1);
  });
}

}  // namespace semisplit
