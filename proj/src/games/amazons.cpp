#include "semisplit/games/amazons.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "semisplit/core/errors.hpp"

namespace semisplit {

AmazonsGame::AmazonsGame(int size, Strategy strategy) : size_(size), strategy_(strategy) {
  if (size < 5 || size * size > State::kMaxCells) throw ConfigError("amazons: board size must be in [5, 10]");
}

AmazonsState AmazonsGame::initial_state() const {
  // The standard 10x10 layout scaled down: two amazons on the home row and
  // two on the side files, mirrored for black.
  State s;
  const int n = size_;
  const int k = std::max(1, n / 2 - 2);
  const auto put = [&](int r, int c, State::Cell piece) { s.cells[r * n + c] = piece; };
  put(0, k, State::kWhite);
  put(0, n - 1 - k, State::kWhite);
  put(k, 0, State::kWhite);
  put(k, n - 1, State::kWhite);
  put(n - 1, k, State::kBlack);
  put(n - 1, n - 1 - k, State::kBlack);
  put(n - 1 - k, 0, State::kBlack);
  put(n - 1 - k, n - 1, State::kBlack);
  return s;
}

void AmazonsGame::legal_semimoves(const State& s, std::vector<Semimove>& out) const {
  out.clear();
  const auto own = static_cast<std::int8_t>(s.to_move + 1);
  const int cells = size_ * size_;
  const auto emit = [&out](std::uint32_t kind, int payload) {
    out.push_back(make_semimove(kind, static_cast<std::uint32_t>(payload)));
  };
  switch (s.phase) {
    case State::kNodal:
      if (strategy_ == Strategy::kOrthodox) {
        State work = s;
        for (int from = 0; from < cells; ++from) {
          if (s.cells[from] != own) continue;
          work.cells[from] = State::kEmpty;
          for_each_reachable(work, from, [&](int to) {
            work.cells[to] = own;
            for_each_reachable(work, to, [&](int arrow) { emit(kMove, from << 16 | to << 8 | arrow); });
            work.cells[to] = State::kEmpty;
          });
          work.cells[from] = own;
        }
      } else if (has_shift(strategy_)) {
        for (int c = 0; c < size_; ++c) emit(kColumn, c);
      } else {
        for (int sq = 0; sq < cells; ++sq) {
          if (s.cells[sq] == own) emit(kLift, sq);
        }
      }
      return;
    case State::kColumnChosen:
      for (int r = 0; r < size_; ++r) {
        if (s.cells[r * size_ + s.column] == own) emit(kRow, r);
      }
      return;
    case State::kLifted:
      if (has_plus(strategy_)) {
        for (int d = 0; d < 8; ++d) emit(kDirection, d);
      } else {
        for_each_reachable(s, s.from, [&](int to) { emit(kDrop, to); });
      }
      return;
    case State::kDirectionChosen:
      for_each_along(s, s.from, s.direction, [&](int to) { emit(kDrop, to); });
      return;
    case State::kDropped:
      if (has_plus(strategy_)) {
        for (int d = 0; d < 8; ++d) emit(kArrowDirection, d);
      } else {
        for_each_reachable(s, s.at, [&](int arrow) { emit(kShoot, arrow); });
      }
      return;
    case State::kArrowDirectionChosen:
      for_each_along(s, s.at, s.direction, [&](int arrow) { emit(kShoot, arrow); });
      return;
    default:
      assert(false);
  }
}

void AmazonsGame::lift(State& s, int square) const {
  s.cells[square] = State::kEmpty;
  s.from = static_cast<std::int8_t>(square);
  s.phase = State::kLifted;
}

void AmazonsGame::shoot(State& s, int square) const {
  s.cells[square] = State::kArrow;
  s.to_move = static_cast<std::int8_t>(1 - s.to_move);
  s.phase = State::kNodal;
  s.column = s.from = s.at = s.direction = -1;
}

void AmazonsGame::apply(State& s, Semimove m) const {
  const auto payload = static_cast<int>(semimove_payload(m));
  const auto own = static_cast<std::int8_t>(s.to_move + 1);
  switch (semimove_kind(m)) {
    case kMove: {
      const int from = payload >> 16;
      const int to = (payload >> 8) & 0xFF;
      s.cells[from] = State::kEmpty;
      s.cells[to] = own;
      shoot(s, payload & 0xFF);
      return;
    }
    case kColumn:
      s.column = static_cast<std::int8_t>(payload);
      s.phase = State::kColumnChosen;
      return;
    case kRow:
      lift(s, payload * size_ + s.column);
      s.column = -1;
      return;
    case kLift:
      lift(s, payload);
      return;
    case kDirection:
      s.direction = static_cast<std::int8_t>(payload);
      s.phase = State::kDirectionChosen;
      return;
    case kDrop:
      s.cells[payload] = own;
      s.at = static_cast<std::int8_t>(payload);
      s.direction = -1;
      s.phase = State::kDropped;
      return;
    case kArrowDirection:
      s.direction = static_cast<std::int8_t>(payload);
      s.phase = State::kArrowDirectionChosen;
      return;
    case kShoot:
      shoot(s, payload);
      return;
    default:
      assert(false);
  }
}

Scores AmazonsGame::scores(const State& s) const {
  // Play ends only when the player to move is stuck; the other player wins.
  Scores out{};
  out[1 - s.to_move] = kMaxScore;
  return out;
}

MoveKey AmazonsGame::move_key(const State&, const Submove& move) const {
  int from = -1;
  int to = -1;
  int arrow = -1;
  int column = -1;
  for (Semimove m : move) {
    const auto payload = static_cast<int>(semimove_payload(m));
    switch (semimove_kind(m)) {
      case kMove:
        from = payload >> 16;
        to = (payload >> 8) & 0xFF;
        arrow = payload & 0xFF;
        break;
      case kColumn:
        column = payload;
        break;
      case kRow:
        from = payload * size_ + column;
        break;
      case kLift:
        from = payload;
        break;
      case kDrop:
        to = payload;
        break;
      case kShoot:
        arrow = payload;
        break;
      default:
        break;  // directions are implied by the squares
    }
  }
  return static_cast<MoveKey>(from) << 16 | static_cast<MoveKey>(to) << 8 | static_cast<MoveKey>(arrow);
}

std::string AmazonsGame::square_name(int square) const {
  std::string out(1, static_cast<char>('a' + square % size_));
  out += std::to_string(square / size_ + 1);
  return out;
}

std::string AmazonsGame::move_to_string(MoveKey key) const {
  return square_name(static_cast<int>(key >> 16)) + "-" + square_name(static_cast<int>((key >> 8) & 0xFF)) + "/" +
         square_name(static_cast<int>(key & 0xFF));
}

std::string AmazonsGame::dump(const State& s) const {
  std::ostringstream os;
  for (int r = size_ - 1; r >= 0; --r) {
    for (int c = 0; c < size_; ++c) os << ".WBx"[s.cells[r * size_ + c]];
    os << '\n';
  }
  os << "to_move=" << int{s.to_move} << " phase=" << int{s.phase} << " from=" << int{s.from}
     << " at=" << int{s.at} << " direction=" << int{s.direction} << " column=" << int{s.column} << '\n';
  return os.str();
}

}  // namespace semisplit
