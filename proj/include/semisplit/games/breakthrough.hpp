#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "semisplit/core/game.hpp"
#include "semisplit/core/semimove.hpp"

namespace semisplit {

// Breakthrough and Knightthrough. Player 0 starts on the two lowest rows and
// moves upward; reaching the far row wins. Pawns step straight forward onto
// an empty square or diagonally forward onto a non-own square; knights make
// any forward knight jump onto a non-own square. A player with no legal move
// loses, so draws are impossible.
//
// Splits: Mod lifts a piece (any own piece, possibly blocked) and then drops
// it; Shift first picks a column (any column) and then a row holding an own
// piece. Plus adds no decisive semimove here and is treated as Mod.
struct BreakthroughState {
  static constexpr int kMaxCells = 100;
  enum Phase : std::int8_t { kNodal = 0, kLifted = 1, kColumnChosen = 2 };

  std::array<std::int8_t, kMaxCells> cells{};  // 0 empty, 1 + player
  std::int8_t to_move = 0;
  std::int8_t phase = kNodal;
  std::int8_t selected = -1;  // lifted square, or chosen column
  std::int8_t winner = -1;

  friend bool operator==(const BreakthroughState&, const BreakthroughState&) = default;
};

struct BreakthroughParams {
  int width = 8;
  int height = 8;
  bool knights = false;
  // Test hook: the split encodings forget the first destination of pieces on
  // column 0, breaking equivalence with the orthodox encoding.
  bool corrupt = false;
};

class BreakthroughGame {
 public:
  using State = BreakthroughState;
  static constexpr bool kSharedNodalStates = true;

  enum Kind : std::uint32_t { kMove = 1, kLift = 2, kDrop = 3, kColumn = 4, kRow = 5 };

  BreakthroughGame(BreakthroughParams params, Strategy strategy);

  [[nodiscard]] State initial_state() const;
  void legal_semimoves(const State& s, std::vector<Semimove>& out) const;
  void apply(State& s, Semimove m) const;
  [[nodiscard]] bool is_nodal(const State& s) const { return s.phase == State::kNodal; }
  [[nodiscard]] bool is_terminal(const State& s) const { return s.winner >= 0; }
  [[nodiscard]] Scores scores(const State& s) const;
  [[nodiscard]] PlayerId current_player(const State& s) const { return s.to_move; }
  [[nodiscard]] int player_count() const { return 2; }
  [[nodiscard]] bool single_semimove_moves() const { return strategy_ == Strategy::kOrthodox; }
  [[nodiscard]] MoveKey move_key(const State& from, const Submove& move) const;
  [[nodiscard]] std::string move_to_string(MoveKey key) const;
  [[nodiscard]] std::string dump(const State& s) const;
  [[nodiscard]] std::string name() const { return params_.knights ? "knightthrough" : "breakthrough"; }
  [[nodiscard]] Strategy strategy() const { return strategy_; }
  [[nodiscard]] const BreakthroughParams& params() const { return params_; }

  // Destinations of the piece of `player` standing on `square` (which may
  // already be lifted off the board).
  void destinations(const State& s, int square, PlayerId player, std::vector<int>& out) const;

 private:
  void drop(State& s, int from, int to) const;
  [[nodiscard]] std::string square_name(int square) const;

  BreakthroughParams params_;
  Strategy strategy_;
  int cells_;
};

}  // namespace semisplit
