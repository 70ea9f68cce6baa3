#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "semisplit/core/game.hpp"
#include "semisplit/core/semimove.hpp"

namespace semisplit {

// Pentago on an even n x n board made of four (n/2)x(n/2) subboards. A move
// places a ball on an empty square and then rotates one subboard by a quarter
// turn. Lines are checked after the placement (a line there wins at once and
// the rotation is skipped) and again after the rotation, where lines for both
// players or a full board are draws. The winning line length is 5, or 4 on
// the 4x4 board.
//
// Splits: Mod = place, rotate (subboard and direction together). Plus splits
// the rotation into subboard then direction. Shift places by column (any
// column) then row (rows empty in that column); the rotation is not shifted.
struct PentagoState {
  static constexpr int kMaxCells = 36;
  enum Phase : std::int8_t { kNodal = 0, kColumnChosen, kPlaced, kSubboardChosen };
  static constexpr std::int8_t kDraw = 2;

  std::array<std::int8_t, kMaxCells> cells{};
  std::int8_t to_move = 0;
  std::int8_t phase = kNodal;
  std::int8_t pending = -1;  // chosen column, or chosen subboard
  std::int8_t result = -1;   // winner, kDraw, or -1 while running
  std::int8_t filled = 0;

  friend bool operator==(const PentagoState&, const PentagoState&) = default;
};

class PentagoGame {
 public:
  using State = PentagoState;
  static constexpr bool kSharedNodalStates = true;

  enum Kind : std::uint32_t {
    kMove = 1,
    kPlace = 2,
    kRotate = 3,
    kSubboard = 4,
    kDirection = 5,
    kColumn = 6,
    kRow = 7,
  };

  PentagoGame(int size, Strategy strategy);

  [[nodiscard]] State initial_state() const { return State{}; }
  void legal_semimoves(const State& s, std::vector<Semimove>& out) const;
  void apply(State& s, Semimove m) const;
  [[nodiscard]] bool is_nodal(const State& s) const { return s.phase == State::kNodal; }
  [[nodiscard]] bool is_terminal(const State& s) const { return s.result >= 0; }
  [[nodiscard]] Scores scores(const State& s) const;
  [[nodiscard]] PlayerId current_player(const State& s) const { return s.to_move; }
  [[nodiscard]] int player_count() const { return 2; }
  [[nodiscard]] bool single_semimove_moves() const { return strategy_ == Strategy::kOrthodox; }
  [[nodiscard]] MoveKey move_key(const State& from, const Submove& move) const;
  [[nodiscard]] std::string move_to_string(MoveKey key) const;
  [[nodiscard]] std::string dump(const State& s) const;
  [[nodiscard]] std::string name() const { return "pentago"; }
  [[nodiscard]] Strategy strategy() const { return strategy_; }
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] int line_length() const { return line_; }

  // Rotations are numbered subboard * 2 + direction; direction 0 turns
  // clockwise as the board is printed.
  static constexpr int kRotations = 8;
  void rotate(State& s, int rotation) const;
  [[nodiscard]] bool has_line(const State& s, std::int8_t piece) const;

 private:
  void place(State& s, int square) const;
  void finish_rotation(State& s, int rotation) const;
  [[nodiscard]] std::string square_name(int square) const;

  int size_;
  int half_;
  int line_;
  Strategy strategy_;
};

}  // namespace semisplit
