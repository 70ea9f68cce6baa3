// Command-line front end: series, bench, calibrate, list-games, verify.
//
// Exit codes: 0 success, 1 verification failed, 2 usage error, 3 invalid
// configuration, 4 runtime failure.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "semisplit/cli/agent_spec.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/games/registry.hpp"
#include "semisplit/harness/benchmark.hpp"
#include "semisplit/harness/series.hpp"
#include "semisplit/harness/verify.hpp"

namespace {

using namespace semisplit;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitRuntime = 4;

constexpr const char* kWorkersEnv = "SEMISPLIT_WORKERS";

int default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const int n = std::stoi(env, &used);
    if (used == std::string(env).size() && n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string(kWorkersEnv) + " must be a positive integer, got '" + env + "'");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

struct SeriesArgs {
  std::string game = "breakthrough";
  std::string a;
  std::string b;
  std::string budget = "timed:0.5";
  int plays = 300;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out;
  std::string timing;
  bool check_legality = false;
};

int run_series_command(const SeriesArgs& args) {
  SeriesConfig cfg;
  cfg.game = parse_game_spec(args.game, Strategy::kOrthodox);
  cfg.a = parse_agent_spec(args.a);
  cfg.b = parse_agent_spec(args.b);
  cfg.budget = parse_budget_spec(args.budget);
  cfg.plays = args.plays;
  cfg.seed = args.seed;
  cfg.workers = args.workers > 0 ? args.workers : default_workers();
  cfg.check_legality = args.check_legality;
  // Open outputs before the (possibly long) run so bad paths fail fast.
  std::ofstream out;
  std::ofstream timing_out;
  if (!args.out.empty()) out = open_output(args.out);
  if (!args.timing.empty()) timing_out = open_output(args.timing);
  SeriesTiming timing;
  const SeriesResult result = run_series(cfg, &timing);
  std::cout << format_series_table(result);
  std::cout << "wall time " << std::fixed << std::setprecision(1) << timing.wall_seconds << " s\n";
  if (out.is_open()) write_series(result, out);
  if (timing_out.is_open()) write_timing(timing, timing_out);
  return 0;
}

struct BenchArgs {
  std::string game = "breakthrough";
  std::string strategy = "orthodox";
  std::uint64_t sims = 0;
  double seconds = 0.0;
  std::uint64_t seed = 1;
};

int run_bench_command(const BenchArgs& args) {
  if (args.sims == 0 && !(args.seconds > 0.0)) throw ConfigError("bench needs --sims or --seconds");
  const GameSpec spec = parse_game_spec(args.game, parse_strategy(args.strategy));
  const auto stats = flat_mc_benchmark(make_game(spec), args.sims, args.seconds, args.seed);
  std::cout << render_game_spec(spec) << " " << to_string(spec.strategy) << "\n";
  if (!stats) {
    std::cout << "no simulations ran; all statistics absent\n";
    return 0;
  }
  std::cout << std::fixed << std::setprecision(2) << "simulations              " << stats->simulations << "\n"
            << "nodal states/sec         " << stats->nodal_states_per_sec() << "\n"
            << "simulations/sec          " << stats->sims_per_sec() << "\n"
            << "mean nodal states/sim    " << stats->mean_nodal_per_sim() << "\n"
            << "mean all states/sim      " << stats->mean_all_states_per_sim() << "\n"
            << "mean branching           " << stats->mean_branching() << "\n";
  return 0;
}

int run_calibrate_command(const std::string& game, double seconds, std::uint64_t seed) {
  if (!(seconds > 0.0)) throw ConfigError("--seconds must be positive");
  const GameSpec spec = parse_game_spec(game, Strategy::kOrthodox);
  const std::uint64_t budget = calibrate_fixed_budget(spec, seconds, seed);
  std::cout << render_game_spec(spec) << ": " << budget << " nodal states in " << seconds
            << " s; use --budget fixed:" << budget << "\n";
  return 0;
}

int run_list_games_command() {
  for (const auto& info : list_games()) {
    std::cout << info.name << "  (" << info.parameters << ")\n";
    for (Strategy s : info.strategies) {
      const auto semantics = split_semantics(info.name, s);
      std::cout << "  " << std::left << std::setw(14) << to_string(s);
      if (semantics.semimoves_per_move > 0) {
        const int n = semantics.semimoves_per_move;
        std::cout << n << (n == 1 ? " semimove:  " : " semimoves: ");
      }
      std::cout << semantics.description << "\n";
    }
  }
  return 0;
}

int run_verify_command(const std::string& game, const std::string& strategy, int plies, std::uint64_t random_calls,
                       std::uint64_t seed) {
  if (plies < 0) throw ConfigError("--plies must not be negative");
  const GameSpec base = parse_game_spec(game, Strategy::kOrthodox);
  std::vector<Strategy> strategies;
  if (strategy == "all") {
    strategies = supported_strategies(base.name);
  } else {
    strategies.push_back(parse_strategy(strategy));
  }
  bool all_ok = true;
  for (Strategy s : strategies) {
    GameSpec spec = base;
    spec.strategy = s;
    const VerifyReport report = verify_game(spec, plies, random_calls, seed);
    std::cout << (report.ok() ? "OK   " : "FAIL ") << report.describe() << "\n";
    all_ok = all_ok && report.ok();
  }
  return all_ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semisplit MCTS experiments"};
  app.require_subcommand(1);

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "play a series between two agents");
  series_cmd->add_option("--game", series.game, "game spec, e.g. breakthrough or amazons:8")->capture_default_str();
  series_cmd->add_option("--a", series.a, "agent A, e.g. O/S@Mod")->required();
  series_cmd->add_option("--b", series.b, "agent B, e.g. O/O")->required();
  series_cmd->add_option("--budget", series.budget, "fixed:<nodal states> or timed:<seconds>")->capture_default_str();
  series_cmd->add_option("--plays", series.plays, "number of plays (even)")->capture_default_str();
  series_cmd->add_option("--seed", series.seed, "master seed")->capture_default_str();
  series_cmd->add_option("--workers", series.workers,
                         std::string("parallel plays; default from ") + kWorkersEnv + " or 1");
  series_cmd->add_option("--out", series.out, "results file (JSON lines)");
  series_cmd->add_option("--timing", series.timing, "wall-clock measurements file (JSON)");
  series_cmd->add_flag("--check-legality", series.check_legality, "replay every move in the orthodox encoding");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "flat Monte-Carlo statistics from the initial state");
  bench_cmd->add_option("--game", bench.game, "game spec")->capture_default_str();
  bench_cmd->add_option("--strategy", bench.strategy, "split strategy")->capture_default_str();
  bench_cmd->add_option("--sims", bench.sims, "number of simulations");
  bench_cmd->add_option("--seconds", bench.seconds, "run for this long instead");
  bench_cmd->add_option("--seed", bench.seed, "seed")->capture_default_str();

  std::string calibrate_game = "breakthrough";
  double calibrate_seconds = 10.0;
  std::uint64_t calibrate_seed = 1;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "fixed budget from an orthodox agent's first turn");
  calibrate_cmd->add_option("--game", calibrate_game, "game spec")->capture_default_str();
  calibrate_cmd->add_option("--seconds", calibrate_seconds, "measured turn length")->capture_default_str();
  calibrate_cmd->add_option("--seed", calibrate_seed, "seed")->capture_default_str();

  auto* list_cmd = app.add_subcommand("list-games", "games, split strategies and sizes");

  std::string verify_game_text = "breakthrough:5";
  std::string verify_strategy = "all";
  int verify_plies = 3;
  std::uint64_t verify_calls = 10000;
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "equivalence with the orthodox encoding and random-move sweeps");
  verify_cmd->add_option("--game", verify_game_text, "game spec")->capture_default_str();
  verify_cmd->add_option("--strategy", verify_strategy, "split strategy or 'all'")->capture_default_str();
  verify_cmd->add_option("--plies", verify_plies, "full moves to co-traverse")->capture_default_str();
  verify_cmd->add_option("--random-calls", verify_calls, "random-move completeness calls, 0 to skip")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*series_cmd) return run_series_command(series);
    if (*bench_cmd) return run_bench_command(bench);
    if (*calibrate_cmd) return run_calibrate_command(calibrate_game, calibrate_seconds, calibrate_seed);
    if (*list_cmd) return run_list_games_command();
    if (*verify_cmd) {
      return run_verify_command(verify_game_text, verify_strategy, verify_plies, verify_calls, verify_seed);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
