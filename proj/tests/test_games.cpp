#include <gtest/gtest.h>

#include <set>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/equivalence.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/games/registry.hpp"

using namespace semisplit;

namespace {

BreakthroughGame breakthrough(Strategy s, int w = 8, int h = 8, bool knights = false) {
  BreakthroughParams p;
  p.width = w;
  p.height = h;
  p.knights = knights;
  return BreakthroughGame(p, s);
}

template <typename G>
std::vector<Semimove> semimoves(const G& game, const typename G::State& s) {
  std::vector<Semimove> out;
  game.legal_semimoves(s, out);
  return out;
}

template <typename G>
std::set<std::size_t> move_lengths(const G& game, const typename G::State& s) {
  std::set<std::size_t> out;
  for (const auto& m : enumerate_moves(game, s)) out.insert(m.size());
  return out;
}

template <typename G>
int alive_children(const G& game, const typename G::State& s) {
  int alive = 0;
  for (Semimove m : semimoves(game, s)) {
    auto child = s;
    game.apply(child, m);
    if (game.is_nodal(child) || !enumerate_moves(game, child).empty()) ++alive;
  }
  return alive;
}

}  // namespace

TEST(Breakthrough, InitialMoveCounts) {
  const auto ortho = breakthrough(Strategy::kOrthodox);
  EXPECT_EQ(semimoves(ortho, ortho.initial_state()).size(), 22u);  // 6 inner pawns x 3 + 2 edge pawns x 2
  const auto mod = breakthrough(Strategy::kMod);
  // Any own piece can be lifted; only the 8 front-row pawns lead anywhere.
  EXPECT_EQ(semimoves(mod, mod.initial_state()).size(), 16u);
  EXPECT_EQ(alive_children(mod, mod.initial_state()), 8);
  EXPECT_EQ(enumerate_moves(mod, mod.initial_state()).size(), 22u);
}

TEST(Breakthrough, MoveKeysAgreeAcrossEncodings) {
  const auto ortho = breakthrough(Strategy::kOrthodox);
  std::set<std::string> expected;
  for (const auto& m : enumerate_moves(ortho, ortho.initial_state())) {
    expected.insert(ortho.move_to_string(ortho.move_key(ortho.initial_state(), m)));
  }
  EXPECT_TRUE(expected.count("a2-a3"));
  EXPECT_TRUE(expected.count("a2-b3"));
  EXPECT_FALSE(expected.count("a1-a2"));
  for (Strategy s : {Strategy::kMod, Strategy::kModPlus, Strategy::kModShift}) {
    const auto game = breakthrough(s);
    std::set<std::string> got;
    for (const auto& m : enumerate_moves(game, game.initial_state())) {
      got.insert(game.move_to_string(game.move_key(game.initial_state(), m)));
    }
    EXPECT_EQ(got, expected) << to_string(s);
  }
}

TEST(Breakthrough, ShiftMovesHaveThreeSemimoves) {
  const auto game = breakthrough(Strategy::kModShift);
  EXPECT_EQ(move_lengths(game, game.initial_state()), std::set<std::size_t>{3});
  const auto mod = breakthrough(Strategy::kMod);
  EXPECT_EQ(move_lengths(mod, mod.initial_state()), std::set<std::size_t>{2});
}

TEST(Breakthrough, ReachingTheLastRowWins) {
  const auto game = breakthrough(Strategy::kOrthodox, 3, 4);
  BreakthroughState s;
  s.cells[2 * 3 + 0] = 1;  // white pawn on a3, one step from the last row
  s.cells[0 * 3 + 2] = 2;  // black pawn on c1
  s.cells[3 * 3 + 2] = 2;
  s.to_move = 0;
  apply_submove(game, s, Submove{make_semimove(BreakthroughGame::kMove, 6 << 8 | 9)});
  EXPECT_TRUE(game.is_terminal(s));
  EXPECT_EQ(game.scores(s), (Scores{100, 0}));
}

TEST(Breakthrough, StuckPlayerLoses) {
  const auto game = breakthrough(Strategy::kMod, 3, 4);
  // Black's only pawn stands on white's home row and cannot step further.
  BreakthroughState s;
  s.cells[1 * 3 + 1] = 1;
  s.cells[0 * 3 + 1] = 2;
  s.to_move = 1;
  EXPECT_FALSE(game.is_terminal(s));
  EXPECT_TRUE(enumerate_moves(game, s).empty());
  EXPECT_TRUE(is_play_end(game, s));
  EXPECT_EQ(game.scores(s), (Scores{100, 0}));
}

TEST(Breakthrough, LiftingABlockedPieceLeadsToADeadState) {
  const auto game = breakthrough(Strategy::kMod);
  auto s = game.initial_state();
  game.apply(s, make_semimove(BreakthroughGame::kLift, 0));  // a1 is boxed in by own pawns
  EXPECT_FALSE(game.is_nodal(s));
  EXPECT_TRUE(semimoves(game, s).empty());
}

TEST(Knightthrough, InitialMoves) {
  const auto game = breakthrough(Strategy::kOrthodox, 8, 8, true);
  // Second-row knights jump onto rows 3 and 4: a2:2 b2:3 c2..f2:4 g2:3 h2:2 = 26.
  // First-row knights only reach row 3: a1:1 b1..g1:2 h1:1 = 14.
  EXPECT_EQ(semimoves(game, game.initial_state()).size(), 40u);
  const auto mod = breakthrough(Strategy::kMod, 8, 8, true);
  EXPECT_EQ(enumerate_moves(mod, mod.initial_state()).size(), 40u);
}

TEST(Amazons, InitialMoveCountsMatchBruteForce) {
  // Values from an independent brute-force enumeration.
  EXPECT_EQ(semimoves(AmazonsGame(5, Strategy::kOrthodox), AmazonsGame(5, Strategy::kOrthodox).initial_state()).size(),
            260u);
  EXPECT_EQ(semimoves(AmazonsGame(10, Strategy::kOrthodox), AmazonsGame(10, Strategy::kOrthodox).initial_state()).size(),
            2176u);
  for (Strategy s : {Strategy::kMod, Strategy::kModPlus, Strategy::kModShift, Strategy::kModPlusShift}) {
    const AmazonsGame game(6, s);
    EXPECT_EQ(enumerate_moves(game, game.initial_state()).size(), 544u) << to_string(s);
  }
}

TEST(Amazons, MoveLengthsPerStrategy) {
  for (Strategy s : {Strategy::kMod, Strategy::kModPlus, Strategy::kModShift, Strategy::kModPlusShift}) {
    const AmazonsGame game(5, s);
    const auto expected = static_cast<std::size_t>(split_semantics("amazons", s).semimoves_per_move);
    EXPECT_EQ(move_lengths(game, game.initial_state()), std::set<std::size_t>{expected}) << to_string(s);
  }
}

TEST(Amazons, GrabEmptiesTheSquare) {
  const AmazonsGame game(6, Strategy::kMod);
  auto s = game.initial_state();
  const int a = 0 * 6 + 1;  // b1
  ASSERT_EQ(s.cells[a], AmazonsState::kWhite);
  game.apply(s, make_semimove(AmazonsGame::kLift, a));
  EXPECT_FALSE(game.is_nodal(s));
  EXPECT_EQ(s.cells[a], AmazonsState::kEmpty);
  EXPECT_EQ(s.from, a);
}

TEST(Amazons, GrabbingABlockedAmazonIsDead) {
  const AmazonsGame game(5, Strategy::kMod);
  AmazonsState s;
  s.cells[0] = AmazonsState::kWhite;  // a1 walled in by arrows
  s.cells[1] = AmazonsState::kArrow;
  s.cells[5] = AmazonsState::kArrow;
  s.cells[6] = AmazonsState::kArrow;
  s.cells[24] = AmazonsState::kWhite;  // a free amazon elsewhere
  s.cells[12] = AmazonsState::kBlack;
  game.apply(s, make_semimove(AmazonsGame::kLift, 0));
  EXPECT_TRUE(semimoves(game, s).empty());
  Rng rng(1);
  EXPECT_FALSE(semisplit_simulation(game, s, rng).has_value());
}

TEST(Amazons, PlusOffersAllDirectionsAndBlockedOnesAreDead) {
  const AmazonsGame game(5, Strategy::kModPlus);
  auto s = game.initial_state();
  game.apply(s, make_semimove(AmazonsGame::kLift, 1));  // b1 on the edge
  EXPECT_EQ(semimoves(game, s).size(), 8u);
  auto down = s;
  game.apply(down, make_semimove(AmazonsGame::kDirection, 6));  // (-1, 0): off the board
  EXPECT_TRUE(semimoves(game, down).empty());
}

TEST(Amazons, StuckPlayerLoses) {
  const AmazonsGame game(5, Strategy::kOrthodox);
  AmazonsState s;
  for (auto& c : s.cells) c = AmazonsState::kArrow;
  s.cells[0] = AmazonsState::kWhite;
  s.cells[24] = AmazonsState::kBlack;
  s.cells[23] = AmazonsState::kEmpty;
  s.cells[22] = AmazonsState::kEmpty;
  EXPECT_TRUE(is_play_end(game, s));
  EXPECT_EQ(game.scores(s), (Scores{0, 100}));
  s.to_move = 1;
  EXPECT_FALSE(is_play_end(game, s));
}

TEST(Pentago, InitialMoveCounts) {
  const PentagoGame ortho(6, Strategy::kOrthodox);
  EXPECT_EQ(semimoves(ortho, ortho.initial_state()).size(), 288u);
  const PentagoGame plus(6, Strategy::kModPlus);
  EXPECT_EQ(enumerate_moves(plus, plus.initial_state()).size(), 36u * 4u * 2u);
  EXPECT_EQ(move_lengths(plus, plus.initial_state()), std::set<std::size_t>{3});
  const PentagoGame small(4, Strategy::kModPlusShift);
  EXPECT_EQ(enumerate_moves(small, small.initial_state()).size(), 16u * 8u);
  EXPECT_EQ(move_lengths(small, small.initial_state()), std::set<std::size_t>{4});
}

TEST(Pentago, PlacingABallAwaitsARotation) {
  const PentagoGame game(6, Strategy::kMod);
  auto s = game.initial_state();
  game.apply(s, make_semimove(PentagoGame::kPlace, 2 * 6 + 3));
  EXPECT_FALSE(game.is_nodal(s));
  EXPECT_EQ(s.cells[2 * 6 + 3], 1);
  const auto next = semimoves(game, s);
  ASSERT_EQ(next.size(), 8u);
  for (Semimove m : next) EXPECT_EQ(semimove_kind(m), PentagoGame::kRotate);
}

TEST(Pentago, RotationTurnsTheSubboard) {
  const PentagoGame game(6, Strategy::kOrthodox);
  PentagoState s;
  s.cells[0] = 1;  // a1, bottom-left corner of subboard 0
  auto cw = s;
  game.rotate(cw, 0);
  EXPECT_EQ(cw.cells[2 * 6 + 0], 1);  // clockwise with rows growing upward: to a3
  auto ccw = s;
  game.rotate(ccw, 1);
  EXPECT_EQ(ccw.cells[0 * 6 + 2], 1);  // to c1
  auto back = cw;
  game.rotate(back, 1);
  EXPECT_EQ(back, s);
  PentagoState t;
  t.cells[5 * 6 + 5] = 2;  // f6, top-right corner of subboard 3
  game.rotate(t, 3 * 2);
  EXPECT_EQ(t.cells[3 * 6 + 5], 2);  // clockwise: to f4
}

TEST(Pentago, PlacementLineEndsTheMoveAtOnce) {
  for (Strategy s : {Strategy::kOrthodox, Strategy::kMod, Strategy::kModShift}) {
    const PentagoGame game(6, s);
    PentagoState st;
    for (int c = 0; c < 4; ++c) st.cells[c] = 1;
    st.cells[6] = 2;
    st.cells[7] = 2;
    st.cells[8] = 2;
    st.cells[9] = 2;
    st.filled = 8;
    const auto moves = enumerate_moves(game, st);
    int winning = 0;
    for (const auto& m : moves) {
      auto after = st;
      apply_submove(game, after, m);
      if (after.cells[4] == 1 && after.result == 0 && game.is_terminal(after)) {
        ++winning;
        EXPECT_EQ(game.move_to_string(game.move_key(st, m)), "e1");
      }
    }
    EXPECT_EQ(winning, 1) << to_string(s);
  }
}

TEST(Pentago, LinesForBothAfterRotationDraw) {
  const PentagoGame game(4, Strategy::kMod);
  PentagoState s;
  // White column a minus a1, black column d: rotating... build directly:
  // white rows 1 full after rotation and black row 4 full.
  s.cells[0] = 1;
  s.cells[1] = 1;
  s.cells[2] = 1;
  s.cells[12] = 2;
  s.cells[13] = 2;
  s.cells[14] = 2;
  s.cells[15] = 2;  // black already has a line of 4 on the top row
  s.filled = 7;
  auto t = s;
  game.apply(t, make_semimove(PentagoGame::kPlace, 3));  // completes white's bottom row
  // A line after the placement ends the move immediately; black's line does
  // not count then because it is white who just moved.
  EXPECT_TRUE(game.is_nodal(t));
  EXPECT_EQ(t.result, 0);
  // Through a rotation: white row needs d1 which a rotation of subboard 1 brings from c1... use the checker directly.
  PentagoState both;
  for (int c = 0; c < 4; ++c) both.cells[c] = 1;
  for (int c = 0; c < 4; ++c) both.cells[12 + c] = 2;
  EXPECT_TRUE(game.has_line(both, 1));
  EXPECT_TRUE(game.has_line(both, 2));
}

TEST(Pentago, DrawScores) {
  const PentagoGame game(6, Strategy::kOrthodox);
  PentagoState s;
  s.result = PentagoState::kDraw;
  EXPECT_EQ(game.scores(s), (Scores{50, 50}));
}

TEST(Equivalence, AllBoardGamesAtSmallSizesTwoPlies) {
  const auto check = [](const auto& ortho, const auto& split) {
    const auto report = rolled_up_equivalence(ortho, split, 2);
    EXPECT_TRUE(report.equivalent) << split.name() << " " << to_string(split.strategy()) << ": " << report.describe();
  };
  for (Strategy s : {Strategy::kMod, Strategy::kModPlus, Strategy::kModShift}) {
    check(breakthrough(Strategy::kOrthodox, 5, 5, true), breakthrough(s, 5, 5, true));
  }
  for (Strategy s : {Strategy::kMod, Strategy::kModPlus, Strategy::kModShift, Strategy::kModPlusShift}) {
    check(AmazonsGame(5, Strategy::kOrthodox), AmazonsGame(5, s));
    check(PentagoGame(4, Strategy::kOrthodox), PentagoGame(4, s));
  }
}

TEST(Synthetic, Fig1Shape) {
  const auto spec = builtin_synthetic("fig1");
  const SyntheticGame game(spec);
  int nodal = 0;
  int alive_intermediate = 0;
  int dead = 0;
  for (const auto& n : spec.nodes) {
    const auto s = *game.find(n.name);
    if (n.nodal) {
      ++nodal;
    } else if (enumerate_moves(game, s).empty()) {
      ++dead;
    } else {
      ++alive_intermediate;
    }
  }
  EXPECT_EQ(nodal, 9);
  EXPECT_EQ(alive_intermediate, 9);
  EXPECT_EQ(dead, 5);
}

TEST(Synthetic, RolledUpFig1IsTheHandWrittenTree) {
  const auto rolled = rolled_up(builtin_synthetic("fig1"));
  EXPECT_EQ(to_json(rolled), to_json(builtin_synthetic("fig1-orthodox")));
}

TEST(Synthetic, IntermediateNodesActForTheirNodalAncestor) {
  const SyntheticGame game(builtin_synthetic("two-ply"));
  EXPECT_EQ(game.current_player(*game.find("a")), 0);
  EXPECT_EQ(game.current_player(*game.find("a1u")), 1);
}

TEST(Synthetic, ScorelessNodalLeafIsALossForThePlayerToAct) {
  const auto spec = parse_synthetic(R"({"root": "r", "nodes": [
    {"name": "r", "nodal": true, "children": ["b"]},
    {"name": "b", "nodal": true, "player": 1}
  ]})");
  const SyntheticGame game(spec);
  const auto b = *game.find("b");
  EXPECT_FALSE(game.is_terminal(b));
  EXPECT_TRUE(is_play_end(game, b));
  EXPECT_EQ(game.scores(b), (Scores{100, 0}));
}

TEST(Synthetic, RolledUpDeadRootIsAScorelessLeaf) {
  const auto rolled = rolled_up(builtin_synthetic("dead-root"));
  ASSERT_EQ(rolled.nodes.size(), 1u);
  EXPECT_FALSE(rolled.nodes[0].scores.has_value());
  const auto report = rolled_up_equivalence(SyntheticGame(rolled, Strategy::kOrthodox),
                                            SyntheticGame(builtin_synthetic("dead-root")), 3);
  EXPECT_TRUE(report.equivalent) << report.describe();
}

TEST(Synthetic, JsonRoundTrip) {
  for (const auto& name : builtin_synthetic_names()) {
    const auto spec = builtin_synthetic(name);
    EXPECT_EQ(to_json(parse_synthetic(to_json(spec))), to_json(spec)) << name;
  }
}

TEST(Synthetic, ValidationListsEveryProblem) {
  const std::string bad = R"({"root": "r", "nodes": [
    {"name": "r", "nodal": true, "children": ["a", "b", "ghost"]},
    {"name": "a", "label": "x", "scores": [100, 0]},
    {"name": "b", "label": "x", "nodal": true},
    {"name": "orphan", "nodal": true, "scores": [50, 50]}
  ]})";
  try {
    parse_synthetic(bad);
    FAIL() << "expected a ConfigError";
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("unknown child 'ghost'"), std::string::npos) << what;
    EXPECT_NE(what.find("two children labelled 'x'"), std::string::npos) << what;
    EXPECT_NE(what.find("'a' has scores but is not a nodal leaf"), std::string::npos) << what;
    EXPECT_EQ(what.find("'b'"), std::string::npos) << what;
  }
  EXPECT_THROW(parse_synthetic("{\"nodes\": ["), ParseError);
  const std::string cyclic = R"({"root": "r", "nodes": [
    {"name": "r", "nodal": true, "children": ["a"]},
    {"name": "a", "children": ["b"]},
    {"name": "b", "children": ["a"]}
  ]})";
  EXPECT_THROW(parse_synthetic(cyclic), ConfigError);
}

TEST(Registry, UnsupportedCombinationsNameTheValidStrategies) {
  GameSpec spec;
  spec.name = "breakthrough";
  spec.strategy = Strategy::kModPlusShift;
  try {
    make_game(spec);
    FAIL() << "expected a ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("orthodox, Mod, ModPlus, ModShift"), std::string::npos) << e.what();
  }
  spec.name = "chess";
  EXPECT_THROW(make_game(spec), ConfigError);
  spec.name = "pentago";
  spec.width = 5;
  spec.strategy = Strategy::kMod;
  EXPECT_THROW(make_game(spec), ConfigError);
}

TEST(Registry, SplitSemanticsMatchEnumeratedMoves) {
  for (const auto& info : list_games()) {
    if (info.name == "synthetic") continue;
    for (Strategy s : info.strategies) {
      GameSpec spec = parse_game_spec(info.name + (info.name == "pentago" ? ":4" : ":5"), s);
      const auto game = make_game(spec);
      const int expected = split_semantics(info.name, s).semimoves_per_move;
      std::visit(
          [&](const auto& g) {
            EXPECT_EQ(move_lengths(g, g.initial_state()), std::set<std::size_t>{static_cast<std::size_t>(expected)})
                << info.name << " " << to_string(s);
          },
          game);
    }
  }
  EXPECT_EQ(split_semantics("amazons", Strategy::kMod).semimoves_per_move, 3);
  EXPECT_EQ(split_semantics("pentago", Strategy::kModPlus).semimoves_per_move, 3);
  EXPECT_EQ(split_semantics("breakthrough", Strategy::kModShift).semimoves_per_move, 3);
}

TEST(Registry, GameSpecText) {
  const auto spec = parse_game_spec("breakthrough:6x5", Strategy::kMod);
  EXPECT_EQ(spec.width, 6);
  EXPECT_EQ(spec.height, 5);
  EXPECT_EQ(render_game_spec(spec), "breakthrough:6x5");
  EXPECT_EQ(render_game_spec(parse_game_spec("amazons:8", Strategy::kMod)), "amazons:8");
  EXPECT_EQ(render_game_spec(parse_game_spec("synthetic:two-ply", Strategy::kMod)), "synthetic:two-ply");
  EXPECT_THROW(parse_game_spec("amazons:x", Strategy::kMod), ConfigError);
  EXPECT_THROW(parse_game_spec("synthetic:nope", Strategy::kMod), ConfigError);
}
