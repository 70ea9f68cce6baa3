#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/equivalence.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/core/rng.hpp"
#include "semisplit/games/registry.hpp"

using namespace semisplit;

namespace {

SyntheticGame synthetic(const std::string& name) { return SyntheticGame(builtin_synthetic(name)); }

BreakthroughGame breakthrough(Strategy s, int w = 8, int h = 8) {
  BreakthroughParams p;
  p.width = w;
  p.height = h;
  return BreakthroughGame(p, s);
}

}  // namespace

TEST(Rng, SameSeedSameSequence) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng rng(7);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Rng, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(1, i));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Submove, OrderingAndConcatenation) {
  const Semimove a = make_semimove(1, 2);
  const Semimove b = make_semimove(1, 3);
  Submove x{a};
  Submove y{a, b};
  EXPECT_LT(x, y);
  EXPECT_EQ(concatenate(x, Submove{b}), y);
  EXPECT_EQ(y.prefix(1), x);
  EXPECT_EQ(to_string(y), "[1:2 1:3]");
}

TEST(Strategy, ParseAndRender) {
  for (Strategy s : {Strategy::kOrthodox, Strategy::kMod, Strategy::kModPlus, Strategy::kModShift,
                     Strategy::kModPlusShift}) {
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  EXPECT_EQ(parse_strategy("modplusshift"), Strategy::kModPlusShift);
  EXPECT_THROW(parse_strategy("Plus"), ConfigError);
}

TEST(LegalSemimoves, DeadIntermediateStateHasNone) {
  const auto game = synthetic("dead-branch");
  std::vector<Semimove> out{make_semimove(9, 9)};
  game.legal_semimoves(*game.find("dead"), out);
  EXPECT_TRUE(out.empty());
}

TEST(Apply, CopyLeavesSourceUntouched) {
  const auto game = breakthrough(Strategy::kMod);
  const auto s0 = game.initial_state();
  std::vector<Semimove> moves;
  game.legal_semimoves(s0, moves);
  for (Semimove m : moves) {
    auto copy = s0;
    game.apply(copy, m);
    EXPECT_FALSE(copy == s0);
  }
  EXPECT_EQ(s0, game.initial_state());
}

TEST(RandomMove, ForcedChainAlwaysReturnsTheOnlyMove) {
  const auto game = synthetic("chain");
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto m = semisplit_random_move(game, game.initial_state(), rng);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->size(), 4u);
  }
}

TEST(RandomMove, AbsentWhenNoLegalMove) {
  const auto game = synthetic("dead-root");
  Rng rng(1);
  EXPECT_FALSE(semisplit_random_move(game, game.initial_state(), rng).has_value());
  EXPECT_TRUE(enumerate_moves(game, game.initial_state()).empty());
}

TEST(RandomMove, DeadBranchIsNeverReturned) {
  const auto game = synthetic("dead-branch");
  Rng rng(3);
  const auto expected = enumerate_moves(game, game.initial_state());
  ASSERT_EQ(expected.size(), 1u);
  for (int i = 0; i < 10000; ++i) {
    const auto m = semisplit_random_move(game, game.initial_state(), rng);
    ASSERT_TRUE(m.has_value());
    ASSERT_EQ(*m, expected.front());
  }
}

TEST(RandomMove, FailureLeavesStateAndSubmoveUnchanged) {
  const auto game = synthetic("dead-root");
  Rng rng(5);
  SimCounters probe;
  SemimoveBuffers buffers;
  auto s = game.initial_state();
  Submove out;
  EXPECT_FALSE(semisplit_random_move(game, s, rng, probe, out, buffers));
  EXPECT_EQ(s, game.initial_state());
  EXPECT_TRUE(out.empty());
  // Every semimove of the tree was tried: x, y, z.
  EXPECT_EQ(probe.all_states, 3u);
}

TEST(RandomMove, FirstSemimoveIsUniformAmongSiblings) {
  // fig1: c2 is dead and gets redrawn, so each of the three alive root
  // semimoves starts the returned move with probability 1/3.
  const auto game = synthetic("fig1");
  Rng rng(11);
  std::map<std::string, int> first_branch;
  for (int i = 0; i < 40000; ++i) {
    const auto m = semisplit_random_move(game, game.initial_state(), rng);
    ASSERT_TRUE(m.has_value());
    ++first_branch[game.label_of(m->front())];
  }
  ASSERT_EQ(first_branch.size(), 3u);
  for (const auto& [label, count] : first_branch) EXPECT_NEAR(count / 40000.0, 1.0 / 3.0, 0.015) << label;
}

TEST(RandomMove, EveryReturnedMoveIsLegalAndEveryLegalMoveAppears) {
  for (Strategy s : {Strategy::kMod, Strategy::kModShift}) {
    const auto game = breakthrough(s);
    const auto legal = enumerate_moves(game, game.initial_state());
    ASSERT_EQ(legal.size(), 22u);
    std::set<Submove> seen;
    Rng rng(17);
    for (int i = 0; i < 10000; ++i) {
      const auto m = semisplit_random_move(game, game.initial_state(), rng);
      ASSERT_TRUE(m.has_value());
      ASSERT_NE(std::find(legal.begin(), legal.end(), *m), legal.end());
      seen.insert(*m);
    }
    EXPECT_EQ(seen.size(), legal.size());
  }
}

TEST(Simulation, TerminalStateVisitsNothing) {
  const auto game = synthetic("chain");
  const auto end = *game.find("end");
  Rng rng(1);
  SimCounters counters;
  const auto scores = semisplit_simulation(game, end, rng, &counters);
  ASSERT_TRUE(scores.has_value());
  EXPECT_EQ((*scores)[0], 100.0);
  EXPECT_EQ(counters.all_states, 0u);
  EXPECT_EQ(counters.semimoves_generated, 0u);
}

TEST(Simulation, DeadStateFails) {
  const auto game = synthetic("dead-branch");
  Rng rng(1);
  EXPECT_FALSE(semisplit_simulation(game, *game.find("dead"), rng).has_value());
  EXPECT_FALSE(semisplit_simulation(game, *game.find("L"), rng).has_value());
  EXPECT_TRUE(semisplit_simulation(game, *game.find("R"), rng).has_value());
}

TEST(Simulation, NoLegalMoveEndsThePlayAgainstThePlayerToAct) {
  const auto game = synthetic("dead-root");
  Rng rng(1);
  const auto scores = semisplit_simulation(game, game.initial_state(), rng);
  ASSERT_TRUE(scores.has_value());
  EXPECT_EQ((*scores)[0], 0.0);
  EXPECT_EQ((*scores)[1], 100.0);
}

TEST(Simulation, TraceRecordsPlayersAndMoveEnds) {
  const auto game = synthetic("two-ply");
  Rng rng(2);
  SimCounters probe;
  SemimoveBuffers buffers;
  Trace trace;
  const auto scores = semisplit_simulation(game, game.initial_state(), rng, probe, buffers, &trace);
  ASSERT_TRUE(scores.has_value());
  // Two moves of two semimoves each.
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[0].player, 0);
  EXPECT_FALSE(trace[0].ends_nodal);
  EXPECT_TRUE(trace[1].ends_nodal);
  EXPECT_EQ(trace[2].player, 1);
  EXPECT_TRUE(trace[3].ends_nodal);
}

TEST(Simulation, BreakthroughOrthodoxNodalStatesPerPlay) {
  // Random Breakthrough plays last about 64 plies.
  const auto game = breakthrough(Strategy::kOrthodox);
  Rng rng(2024);
  SimCounters counters;
  const int plays = 10000;
  for (int i = 0; i < plays; ++i) ASSERT_TRUE(semisplit_simulation(game, game.initial_state(), rng, &counters));
  const double mean = static_cast<double>(counters.nodal_states) / plays;
  EXPECT_NEAR(mean, 64.0, 64.0 * 0.15);
}

TEST(EnumerateMoves, Fig1HasEightMoves) {
  const auto game = synthetic("fig1");
  const auto moves = enumerate_moves(game, game.initial_state());
  EXPECT_EQ(moves.size(), 8u);
  std::set<std::string> ends;
  for (const auto& m : moves) ends.insert(game.move_to_string(game.move_key(game.initial_state(), m)));
  EXPECT_EQ(ends, (std::set<std::string>{"a7a8Q", "a7a8R", "a7a8B", "a7a8N", "h3g2+", "h3h2+", "h3h4+", "f1e3+"}));
}

TEST(EnumerateMoves, RandomDrawAbsentIffNoMoves) {
  for (const auto& name : builtin_synthetic_names()) {
    const auto game = synthetic(name);
    Rng rng(9);
    const auto moves = enumerate_moves(game, game.initial_state());
    EXPECT_EQ(moves.empty(), !semisplit_random_move(game, game.initial_state(), rng).has_value()) << name;
  }
}

TEST(Equivalence, Fig1MatchesHandWrittenOrthodoxTree) {
  const auto split = synthetic("fig1");
  const auto ortho = synthetic("fig1-orthodox");
  const auto report = rolled_up_equivalence(ortho, split, 2);
  EXPECT_TRUE(report.equivalent) << report.describe();
}

TEST(Equivalence, BreakthroughSmallBoard) {
  const auto ortho = breakthrough(Strategy::kOrthodox, 5, 5);
  for (Strategy s : {Strategy::kMod, Strategy::kModShift}) {
    const auto report = rolled_up_equivalence(ortho, breakthrough(s, 5, 5), 3);
    EXPECT_TRUE(report.equivalent) << report.describe();
    EXPECT_GT(report.states_compared, 1000u);
  }
}

TEST(Equivalence, CorruptedEncodingIsCaught) {
  BreakthroughParams p;
  p.width = p.height = 5;
  const BreakthroughGame ortho(p, Strategy::kOrthodox);
  p.corrupt = true;
  const BreakthroughGame broken(p, Strategy::kMod);
  const auto report = rolled_up_equivalence(ortho, broken, 3);
  ASSERT_FALSE(report.equivalent);
  EXPECT_NE(report.difference.find("only in a: a2-a3"), std::string::npos) << report.describe();
  EXPECT_TRUE(report.path.empty());
}

TEST(Equivalence, DifferentRulesAreCaught) {
  const auto a = synthetic("fig1-orthodox");
  const auto b = synthetic("two-ply");
  EXPECT_FALSE(rolled_up_equivalence(a, b, 1).equivalent);
}
