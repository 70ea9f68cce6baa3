#include "semisplit/harness/series.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <istream>
#include <json.hpp>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "semisplit/cli/agent_spec.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/harness/play.hpp"

namespace semisplit {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "semisplit-series/1";

struct PlayRun {
  PlayRecord record;
  std::array<double, 2> seconds{};
};

PlayRun run_play(const SeriesConfig& cfg, const AnyGame& game_a, const AnyGame& game_b,
                 const std::optional<AnyGame>& oracle, int index) {
  PlayRun run;
  PlayRecord& r = run.record;
  r.index = index;
  r.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(index));
  r.a_seat = index < cfg.plays / 2 ? 0 : 1;
  std::visit(
      [&](const auto& ga) {
        using G = std::decay_t<decltype(ga)>;
        const G& gb = std::get<G>(game_b);
        const G* referee = oracle ? &std::get<G>(*oracle) : nullptr;
        std::unique_ptr<Player<G>> a = std::make_unique<MctsPlayer<G>>(ga, cfg.a, derive_seed(r.seed, 1));
        std::unique_ptr<Player<G>> b;
        if (cfg.b_resigns) {
          b = std::make_unique<ResigningPlayer<G>>(gb);
        } else {
          b = std::make_unique<MctsPlayer<G>>(gb, cfg.b, derive_seed(r.seed, 2));
        }
        std::array<Player<G>*, 2> seats{};
        seats[static_cast<std::size_t>(r.a_seat)] = a.get();
        seats[static_cast<std::size_t>(1 - r.a_seat)] = b.get();
        const PlayOutcome out = play_game<G>(seats, cfg.budget, referee);
        r.scores = out.scores;
        r.turns = out.turns;
        r.resigned = out.resigned.has_value();
        r.moves = out.moves;
        for (std::size_t agent = 0; agent < 2; ++agent) {
          const auto seat = static_cast<std::size_t>(agent == 0 ? r.a_seat : 1 - r.a_seat);
          r.agent_turns[agent] = out.seat_turns[seat];
          r.nodal_states[agent] = out.nodal_states[seat];
          r.iterations[agent] = out.iterations[seat];
          r.max_turn_states[agent] = out.max_turn_states[seat];
          run.seconds[agent] = out.seconds[seat];
        }
      },
      game_a);
  const double mine = r.scores[static_cast<std::size_t>(r.a_seat)];
  const double theirs = r.scores[static_cast<std::size_t>(1 - r.a_seat)];
  r.points_a = mine > theirs ? 1.0 : (mine == theirs ? 0.5 : 0.0);
  return run;
}

void finish_aggregate(SeriesResult& s) {
  s.plays = static_cast<int>(s.records.size());
  s.points_a = 0.0;
  s.wins_a = s.draws = s.losses_a = 0;
  s.a_first = s.a_second = {};
  s.max_turn_states = {};
  std::vector<double> points;
  double turns = 0.0;
  std::array<double, 2> own_turns{}, states{}, iterations{};
  for (const PlayRecord& r : s.records) {
    points.push_back(r.points_a);
    s.points_a += r.points_a;
    if (r.points_a == 1.0) {
      ++s.wins_a;
    } else if (r.points_a == 0.0) {
      ++s.losses_a;
    } else {
      ++s.draws;
    }
    SideSummary& side = r.a_seat == 0 ? s.a_first : s.a_second;
    ++side.plays;
    side.points_a += r.points_a;
    turns += r.turns;
    for (std::size_t k = 0; k < 2; ++k) {
      own_turns[k] += r.agent_turns[k];
      states[k] += static_cast<double>(r.nodal_states[k]);
      iterations[k] += static_cast<double>(r.iterations[k]);
      s.max_turn_states[k] = std::max(s.max_turn_states[k], r.max_turn_states[k]);
    }
  }
  if (s.plays > 0) {
    s.win_rate = win_rate_ci(points, 0.95);
    s.mean_turns = turns / s.plays;
  }
  for (std::size_t k = 0; k < 2; ++k) {
    s.states_per_turn[k] = own_turns[k] > 0 ? states[k] / own_turns[k] : 0.0;
    s.iterations_per_turn[k] = own_turns[k] > 0 ? iterations[k] / own_turns[k] : 0.0;
  }
}

SeriesResult aggregate(const SeriesConfig& cfg, std::vector<PlayRecord> records) {
  SeriesResult s;
  GameSpec shown = cfg.game;
  shown.strategy = Strategy::kOrthodox;
  s.game = render_game_spec(shown);
  s.agent_a = render_agent_spec(cfg.a);
  s.agent_b = cfg.b_resigns ? "resign" : render_agent_spec(cfg.b);
  s.budget = cfg.budget;
  s.seed = cfg.seed;
  s.records = std::move(records);
  s.plays = static_cast<int>(s.records.size());
  finish_aggregate(s);
  return s;
}

json to_json(const PlayRecord& r) {
  return json{{"type", "play"},
              {"index", r.index},
              {"seed", r.seed},
              {"a_seat", r.a_seat},
              {"scores", r.scores},
              {"points_a", r.points_a},
              {"turns", r.turns},
              {"resigned", r.resigned},
              {"agent_turns", r.agent_turns},
              {"nodal_states", r.nodal_states},
              {"iterations", r.iterations},
              {"max_turn_states", r.max_turn_states},
              {"moves", r.moves}};
}

PlayRecord play_from_json(const json& j) {
  PlayRecord r;
  r.index = j.at("index").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.a_seat = j.at("a_seat").get<int>();
  r.scores = j.at("scores").get<Scores>();
  r.points_a = j.at("points_a").get<double>();
  r.turns = j.at("turns").get<int>();
  r.resigned = j.at("resigned").get<bool>();
  r.agent_turns = j.at("agent_turns").get<std::array<int, 2>>();
  r.nodal_states = j.at("nodal_states").get<std::array<std::uint64_t, 2>>();
  r.iterations = j.at("iterations").get<std::array<std::uint64_t, 2>>();
  r.max_turn_states = j.at("max_turn_states").get<std::array<std::uint64_t, 2>>();
  r.moves = j.at("moves").get<std::vector<std::string>>();
  return r;
}

json budget_json(const BudgetSpec& b) {
  if (b.mode == BudgetSpec::Mode::kNodalStates) return json{{"mode", "fixed"}, {"nodal_states", b.nodal_states}};
  return json{{"mode", "timed"}, {"seconds", b.seconds}};
}

BudgetSpec budget_from_json(const json& j) {
  if (j.at("mode").get<std::string>() == "fixed") return BudgetSpec::states(j.at("nodal_states").get<std::uint64_t>());
  return BudgetSpec::timed(j.at("seconds").get<double>());
}

}  // namespace

SeriesResult run_series(const SeriesConfig& cfg, SeriesTiming* timing) {
  if (cfg.plays < 2 || cfg.plays % 2 != 0) throw ConfigError("the number of plays must be even and at least 2");
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
  if (cfg.budget.mode == BudgetSpec::Mode::kNodalStates && cfg.budget.nodal_states == 0) {
    throw ConfigError("a fixed budget needs at least one nodal state");
  }
  if (cfg.budget.mode == BudgetSpec::Mode::kSeconds && !(cfg.budget.seconds > 0.0)) {
    throw ConfigError("a timed budget needs a positive number of seconds");
  }
  cfg.a.validate();
  cfg.b.validate();
  GameSpec spec_a = cfg.game;
  spec_a.strategy = cfg.a.strategy;
  GameSpec spec_b = cfg.game;
  spec_b.strategy = cfg.b.strategy;
  const AnyGame game_a = make_game(spec_a);
  const AnyGame game_b = make_game(spec_b);
  std::optional<AnyGame> oracle;
  if (cfg.check_legality) {
    GameSpec spec_o = cfg.game;
    spec_o.strategy = Strategy::kOrthodox;
    oracle = make_game(spec_o);
  }

  const auto started = std::chrono::steady_clock::now();
  std::vector<PlayRun> runs(static_cast<std::size_t>(cfg.plays));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < cfg.plays; i = next++) {
      try {
        runs[static_cast<std::size_t>(i)] = run_play(cfg, game_a, game_b, oracle, i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.plays;
      }
    }
  };
  const int threads = std::min(cfg.workers, cfg.plays);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PlayRecord> records;
  records.reserve(runs.size());
  SeriesTiming local;
  for (PlayRun& run : runs) {
    for (std::size_t k = 0; k < 2; ++k) local.search_seconds[k] += run.seconds[k];
    records.push_back(std::move(run.record));
  }
  SeriesResult result = aggregate(cfg, std::move(records));
  if (timing != nullptr) {
    local.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    for (std::size_t k = 0; k < 2; ++k) {
      double total = 0.0;
      for (const PlayRecord& r : result.records) total += static_cast<double>(r.nodal_states[k]);
      local.states_per_second[k] = local.search_seconds[k] > 0.0 ? total / local.search_seconds[k] : 0.0;
    }
    *timing = local;
  }
  return result;
}

void write_series(const SeriesResult& s, std::ostream& out) {
  out << json{{"type", "header"},      {"format", kFormat},  {"game", s.game}, {"agent_a", s.agent_a},
              {"agent_b", s.agent_b}, {"budget", budget_json(s.budget)}, {"seed", s.seed}, {"plays", s.plays}}
             .dump()
      << '\n';
  for (const PlayRecord& r : s.records) out << to_json(r).dump() << '\n';
  json agg{{"type", "aggregate"},
           {"plays", s.plays},
           {"points_a", s.points_a},
           {"win_rate", s.win_rate.rate},
           {"ci_low", s.win_rate.low},
           {"ci_high", s.win_rate.high},
           {"ci_defined", s.win_rate.defined},
           {"wins_a", s.wins_a},
           {"draws", s.draws},
           {"losses_a", s.losses_a},
           {"a_first", {{"plays", s.a_first.plays}, {"points_a", s.a_first.points_a}}},
           {"a_second", {{"plays", s.a_second.plays}, {"points_a", s.a_second.points_a}}},
           {"mean_turns", s.mean_turns},
           {"states_per_turn", s.states_per_turn},
           {"iterations_per_turn", s.iterations_per_turn},
           {"max_turn_states", s.max_turn_states}};
  out << agg.dump() << '\n';
}

SeriesResult read_series(std::istream& in) {
  SeriesResult s;
  std::string line;
  bool header = false;
  bool aggregate_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("malformed results line: ") + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      if (j.value("format", "") != kFormat) throw ConfigError("unsupported results format");
      s.game = j.at("game").get<std::string>();
      s.agent_a = j.at("agent_a").get<std::string>();
      s.agent_b = j.at("agent_b").get<std::string>();
      s.budget = budget_from_json(j.at("budget"));
      s.seed = j.at("seed").get<std::uint64_t>();
      header = true;
    } else if (type == "play") {
      s.records.push_back(play_from_json(j));
    } else if (type == "aggregate") {
      aggregate_seen = true;
    }
  }
  if (!header || !aggregate_seen) throw ConfigError("results file lacks a header or an aggregate record");
  finish_aggregate(s);
  return s;
}

void write_timing(const SeriesTiming& t, std::ostream& out) {
  out << json{{"wall_seconds", t.wall_seconds},
              {"search_seconds", t.search_seconds},
              {"states_per_second", t.states_per_second}}
             .dump(2)
      << '\n';
}

std::string format_series_table(const SeriesResult& s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "game      " << s.game << "\n"
      << "budget    " << s.budget.describe() << "\n"
      << "agent A   " << s.agent_a << "\n"
      << "agent B   " << s.agent_b << "\n"
      << "plays     " << s.plays << " (seed " << s.seed << ")\n"
      << "A points  " << s.points_a << "  (W " << s.wins_a << " / D " << s.draws << " / L " << s.losses_a << ")\n"
      << "A rate    " << s.win_rate.rate << "%";
  if (s.win_rate.defined) {
    out << "  95% CI [" << s.win_rate.low << ", " << s.win_rate.high << "]";
  } else {
    out << "  (no interval: one side won every play)";
  }
  out << "\n"
      << "A first   " << s.a_first.points_a << " / " << s.a_first.plays << "\n"
      << "A second  " << s.a_second.points_a << " / " << s.a_second.plays << "\n"
      << "turns     " << s.mean_turns << " per play\n"
      << std::setprecision(0) << "states    A " << s.states_per_turn[0] << "  B " << s.states_per_turn[1]
      << " nodal states per turn\n"
      << "iters     A " << s.iterations_per_turn[0] << "  B " << s.iterations_per_turn[1] << " per turn\n";
  return out.str();
}

}  // namespace semisplit
