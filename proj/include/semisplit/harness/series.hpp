#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "semisplit/games/registry.hpp"
#include "semisplit/harness/stats.hpp"
#include "semisplit/search/budget.hpp"
#include "semisplit/search/config.hpp"

namespace semisplit {

struct SeriesConfig {
  GameSpec game;  // the strategy field is ignored; each agent brings its own
  AgentConfig a;
  AgentConfig b;
  BudgetSpec budget = BudgetSpec::timed(0.5);
  int plays = 300;
  std::uint64_t seed = 1;
  int workers = 1;
  bool check_legality = false;  // replay every move in the orthodox encoding too
  bool b_resigns = false;       // test hook: agent B resigns at once
};

// One play. Per-agent arrays are indexed A = 0, B = 1.
struct PlayRecord {
  int index = 0;
  std::uint64_t seed = 0;
  int a_seat = 0;
  Scores scores{};  // by seat
  double points_a = 0.0;
  int turns = 0;
  bool resigned = false;
  std::array<int, 2> agent_turns{};
  std::array<std::uint64_t, 2> nodal_states{};
  std::array<std::uint64_t, 2> iterations{};
  std::array<std::uint64_t, 2> max_turn_states{};
  std::vector<std::string> moves;

  friend bool operator==(const PlayRecord&, const PlayRecord&) = default;
};

struct SideSummary {
  int plays = 0;
  double points_a = 0.0;
  friend bool operator==(const SideSummary&, const SideSummary&) = default;
};

struct SeriesResult {
  std::string game;
  std::string agent_a;
  std::string agent_b;
  BudgetSpec budget;
  std::uint64_t seed = 0;
  int plays = 0;
  double points_a = 0.0;
  WinRate win_rate;
  int wins_a = 0;
  int draws = 0;
  int losses_a = 0;
  SideSummary a_first;   // A moved first
  SideSummary a_second;
  double mean_turns = 0.0;
  std::array<double, 2> states_per_turn{};      // mean nodal states per own turn
  std::array<double, 2> iterations_per_turn{};  // mean MCTS iterations per own turn
  std::array<std::uint64_t, 2> max_turn_states{};
  std::vector<PlayRecord> records;

  friend bool operator==(const SeriesResult&, const SeriesResult&) = default;
};

// Wall-clock measurements, kept apart from the reproducible results.
struct SeriesTiming {
  double wall_seconds = 0.0;
  std::array<double, 2> search_seconds{};
  std::array<double, 2> states_per_second{};
};

// Runs the plays (in parallel when workers > 1); agent A takes seat 0 in the
// first half and seat 1 in the second. Play i is seeded from (seed, i) only,
// so fixed-budget results do not depend on the worker count.
SeriesResult run_series(const SeriesConfig& config, SeriesTiming* timing = nullptr);

// Results file: JSON lines with a header, one record per play and the
// aggregate last. read_series() restores exactly what write_series() wrote.
void write_series(const SeriesResult& result, std::ostream& out);
SeriesResult read_series(std::istream& in);
void write_timing(const SeriesTiming& timing, std::ostream& out);
std::string format_series_table(const SeriesResult& result);

}  // namespace semisplit
