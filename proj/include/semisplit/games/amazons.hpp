#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "semisplit/core/game.hpp"
#include "semisplit/core/semimove.hpp"

namespace semisplit {

// Amazons on an n x n board. A move lifts an own amazon, slides it like a
// chess queen over empty squares, then shoots an arrow the same way from its
// new square. The player without a legal move loses.
//
// Splits: Mod = lift, drop, arrow. Plus adds one of the eight directions
// before each slide (all eight are offered; a blocked direction is dead).
// Shift lifts by column (any column) and then row (rows holding an own amazon).
struct AmazonsState {
  static constexpr int kMaxCells = 100;
  enum Phase : std::int8_t {
    kNodal = 0,
    kColumnChosen,
    kLifted,
    kDirectionChosen,
    kDropped,
    kArrowDirectionChosen,
  };
  enum Cell : std::int8_t { kEmpty = 0, kWhite = 1, kBlack = 2, kArrow = 3 };

  std::array<std::int8_t, kMaxCells> cells{};
  std::int8_t to_move = 0;
  std::int8_t phase = kNodal;
  std::int8_t column = -1;
  std::int8_t from = -1;  // square the amazon was lifted from
  std::int8_t at = -1;    // square the amazon was dropped on
  std::int8_t direction = -1;

  friend bool operator==(const AmazonsState&, const AmazonsState&) = default;
};

class AmazonsGame {
 public:
  using State = AmazonsState;
  static constexpr bool kSharedNodalStates = true;

  enum Kind : std::uint32_t {
    kMove = 1,
    kLift = 2,
    kDrop = 3,
    kShoot = 4,
    kDirection = 5,
    kArrowDirection = 6,
    kColumn = 7,
    kRow = 8,
  };

  AmazonsGame(int size, Strategy strategy);

  [[nodiscard]] State initial_state() const;
  void legal_semimoves(const State& s, std::vector<Semimove>& out) const;
  void apply(State& s, Semimove m) const;
  [[nodiscard]] bool is_nodal(const State& s) const { return s.phase == State::kNodal; }
  [[nodiscard]] bool is_terminal(const State&) const { return false; }
  [[nodiscard]] Scores scores(const State& s) const;
  [[nodiscard]] PlayerId current_player(const State& s) const { return s.to_move; }
  [[nodiscard]] int player_count() const { return 2; }
  [[nodiscard]] bool single_semimove_moves() const { return strategy_ == Strategy::kOrthodox; }
  [[nodiscard]] MoveKey move_key(const State& from, const Submove& move) const;
  [[nodiscard]] std::string move_to_string(MoveKey key) const;
  [[nodiscard]] std::string dump(const State& s) const;
  [[nodiscard]] std::string name() const { return "amazons"; }
  [[nodiscard]] Strategy strategy() const { return strategy_; }
  [[nodiscard]] int size() const { return size_; }

  // Queen-reachable empty squares from `square` along all directions.
  template <typename F>
  void for_each_reachable(const State& s, int square, F&& visit) const {
    for (int d = 0; d < 8; ++d) for_each_along(s, square, d, visit);
  }

  template <typename F>
  void for_each_along(const State& s, int square, int direction, F&& visit) const {
    int r = square / size_;
    int c = square % size_;
    const int dr = kDirections[direction][0];
    const int dc = kDirections[direction][1];
    for (;;) {
      r += dr;
      c += dc;
      if (r < 0 || r >= size_ || c < 0 || c >= size_) return;
      const int sq = r * size_ + c;
      if (s.cells[sq] != State::kEmpty) return;
      visit(sq);
    }
  }

 private:
  static constexpr int kDirections[8][2] = {{1, -1}, {1, 0}, {1, 1}, {0, -1}, {0, 1}, {-1, -1}, {-1, 0}, {-1, 1}};

  void lift(State& s, int square) const;
  void shoot(State& s, int square) const;
  [[nodiscard]] std::string square_name(int square) const;

  int size_;
  Strategy strategy_;
};

}  // namespace semisplit
