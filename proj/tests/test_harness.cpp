#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "semisplit/cli/agent_spec.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/harness/benchmark.hpp"
#include "semisplit/harness/play.hpp"
#include "semisplit/harness/series.hpp"
#include "semisplit/harness/stats.hpp"

using namespace semisplit;

TEST(WinRate, HalfOfThreeHundred) {
  const WinRate r = win_rate_ci(150, 300);
  EXPECT_DOUBLE_EQ(r.rate, 50.0);
  EXPECT_TRUE(r.defined);
  EXPECT_NEAR(r.high - 50.0, 100 * 1.96 * std::sqrt(0.25 / 300), 0.01);
  EXPECT_NEAR(50.0 - r.low, 5.66, 0.01);
}

TEST(WinRate, OneSidedIsFlagged) {
  EXPECT_FALSE(win_rate_ci(300, 300).defined);
  EXPECT_DOUBLE_EQ(win_rate_ci(300, 300).rate, 100.0);
  EXPECT_FALSE(win_rate_ci(0, 10).defined);
}

TEST(WinRate, LevelZeroHasNoWidth) {
  const WinRate r = win_rate_ci(120, 300, 0.0);
  EXPECT_DOUBLE_EQ(r.low, 40.0);
  EXPECT_DOUBLE_EQ(r.high, 40.0);
}

TEST(WinRate, SampleFormMatchesBinomialWithoutDraws) {
  std::vector<double> points(300, 0.0);
  std::fill(points.begin(), points.begin() + 150, 1.0);
  const WinRate a = win_rate_ci(points);
  const WinRate b = win_rate_ci(150, 300);
  EXPECT_NEAR(a.low, b.low, 1e-9);
  EXPECT_NEAR(a.high, b.high, 1e-9);
  // Draws shrink the interval.
  const WinRate draws = win_rate_ci(std::vector<double>(300, 0.5));
  EXPECT_TRUE(draws.defined);
  EXPECT_DOUBLE_EQ(draws.low, 50.0);
}

TEST(AgentSpec, Examples) {
  const AgentConfig a = parse_agent_spec("O/S@Mod");
  EXPECT_EQ(a.tree, TreeDesign::kOrthodox);
  EXPECT_EQ(a.sim, SimDesign::kSemisplit);
  EXPECT_EQ(a.strategy, Strategy::kMod);
  EXPECT_EQ(a.mast, HeuristicVariant::kNone);
  EXPECT_DOUBLE_EQ(a.exploration_constant(), 0.4);

  const AgentConfig b = parse_agent_spec("R-nodal/S@Mod+MASTsplit");
  EXPECT_EQ(b.tree, TreeDesign::kRollUpNodal);
  EXPECT_EQ(b.mast, HeuristicVariant::kSplit);
  EXPECT_DOUBLE_EQ(b.exploration_constant(), 0.4);

  try {
    parse_agent_spec("R-nodal/S@Mod+RAVEsplit");
    FAIL() << "accepted RAVE-split with a roll-up tree";
  } catch (const ParseError&) {
    FAIL() << "a semantic error was reported as a syntax error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("RAVE-split"), std::string::npos);
  }

  const AgentConfig c = parse_agent_spec("tree=S-nodal;sim=S;split=Mod;mast=split;rave=none");
  EXPECT_EQ(c.tree, TreeDesign::kSemisplitNodal);
  EXPECT_EQ(c.mast, HeuristicVariant::kSplit);
  EXPECT_DOUBLE_EQ(parse_agent_spec("S-nodal/S@Mod+RAVEsplit").exploration_constant(), 0.2);
}

TEST(AgentSpec, RoundTrips) {
  for (const char* text : {"O/O", "O/S@Mod", "S-raw/O@ModPlusShift+MASTjoin", "R-nodal/S@Mod+MASTmix+RAVEcontext",
                           "S-nodal/S@ModShift+MASTcontext+RAVEmix+C=0.3+eps=0.1+decay=0.5+k=100+mix=3+reuse+mastexp",
                           "tree=O;sim=S;split=ModPlus;mast=mix;C=0.25;reuse=true"}) {
    const AgentConfig c = parse_agent_spec(text);
    EXPECT_EQ(parse_agent_spec(render_agent_spec(c)), c) << text << " -> " << render_agent_spec(c);
  }
  EXPECT_EQ(render_agent_spec(parse_agent_spec("tree=O;sim=S;split=Mod")), "O/S@Mod");
}

TEST(AgentSpec, SyntaxErrorsNameTokenAndPosition) {
  try {
    parse_agent_spec("O/S@Mod+MASTfoo");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 12u);
  }
  try {
    parse_agent_spec("O/Q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_agent_spec("O/S+C=abc");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_agent_spec("tree=O;bogus=1"), ParseError);
  EXPECT_THROW(parse_agent_spec("OS"), ParseError);
}

namespace {

SeriesConfig small_series(const std::string& game, const std::string& a, const std::string& b, int plays,
                          std::uint64_t budget) {
  SeriesConfig cfg;
  cfg.game = parse_game_spec(game, Strategy::kOrthodox);
  cfg.a = parse_agent_spec(a);
  cfg.b = parse_agent_spec(b);
  cfg.budget = BudgetSpec::states(budget);
  cfg.plays = plays;
  cfg.seed = 7;
  cfg.check_legality = true;
  return cfg;
}

std::string serialized(const SeriesResult& r) {
  std::ostringstream out;
  write_series(r, out);
  return out.str();
}

}  // namespace

TEST(Series, ResigningOpponentLosesEveryPlay) {
  SeriesConfig cfg = small_series("breakthrough:5", "O/O", "O/O", 2, 100);
  cfg.b_resigns = true;
  const SeriesResult r = run_series(cfg);
  EXPECT_DOUBLE_EQ(r.win_rate.rate, 100.0);
  EXPECT_FALSE(r.win_rate.defined);
  EXPECT_EQ(r.a_first.plays, 1);
  EXPECT_EQ(r.a_second.plays, 1);
}

TEST(Series, CrossEncodingPlaysStayLegal) {
  const std::vector<std::array<const char*, 3>> cases{
      {"breakthrough:6", "O/O", "O/S@Mod"},
      {"breakthrough:5", "S-raw/S@ModShift", "R-nodal/O@Mod+MASTsplit"},
      {"knightthrough:6", "S-nodal/S@Mod+MASTcontext+RAVEmix", "O/O+MASTjoin"},
      {"amazons:5", "S-nodal/S@ModPlusShift+RAVEsplit", "O/S@ModShift"},
      {"pentago:4", "R-nodal/S@ModPlusShift+RAVEcontext", "O/O+RAVEjoin"},
      {"synthetic:two-ply", "S-raw/S@Mod", "O/O"},
  };
  for (const auto& [game, a, b] : cases) {
    const SeriesResult r = run_series(small_series(game, a, b, 2, 300));
    EXPECT_EQ(r.plays, 2) << game;
    for (const PlayRecord& p : r.records) {
      EXPECT_GT(p.turns, 0) << game;
      EXPECT_LE(std::max(p.max_turn_states[0], p.max_turn_states[1]), 300u) << game;
    }
  }
}

TEST(Series, BreakthroughAlwaysHasAWinner) {
  const SeriesResult r = run_series(small_series("breakthrough:6", "O/S@Mod", "O/O", 6, 200));
  EXPECT_EQ(r.draws, 0);
}

TEST(Series, FixedBudgetResultsIgnoreWorkerCount) {
  SeriesConfig cfg = small_series("breakthrough:6", "O/S@Mod", "S-nodal/S@Mod+MASTsplit", 4, 300);
  const std::string one = serialized(run_series(cfg));
  cfg.workers = 3;
  EXPECT_EQ(serialized(run_series(cfg)), one);
}

TEST(Series, ResultsFileRoundTrips) {
  const SeriesResult r = run_series(small_series("pentago:4", "O/O", "S-raw/S@ModPlus", 4, 200));
  std::istringstream in(serialized(r));
  EXPECT_EQ(read_series(in), r);
  EXPECT_NE(format_series_table(r).find("A rate"), std::string::npos);
}

TEST(Series, RejectsOddPlayCounts) {
  EXPECT_THROW(run_series(small_series("breakthrough:5", "O/O", "O/O", 3, 100)), ConfigError);
}

TEST(Benchmark, ZeroSimulationsIsAbsent) {
  EXPECT_FALSE(flat_mc_benchmark(make_game(GameSpec{}), 0, 0.0, 1).has_value());
}

TEST(Benchmark, BreakthroughOrthodoxShape) {
  const auto stats = flat_mc_benchmark(make_game(GameSpec{}), 3000, 0.0, 1);
  ASSERT_TRUE(stats.has_value());
  EXPECT_EQ(stats->simulations, 3000u);
  EXPECT_NEAR(stats->mean_nodal_per_sim(), 64.0, 64 * 0.15);
  EXPECT_NEAR(stats->mean_branching(), 25.69, 25.69 * 0.15);
  EXPECT_EQ(stats->nodal_states, stats->all_states);
}

TEST(Calibrate, TinyDurationStillGivesAPositiveBudget) {
  EXPECT_GE(calibrate_fixed_budget(GameSpec{}, 1e-9, 1), 1u);
  EXPECT_GT(calibrate_fixed_budget(GameSpec{}, 0.05, 1), 100u);
}
