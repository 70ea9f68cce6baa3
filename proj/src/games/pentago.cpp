#include "semisplit/games/pentago.hpp"

#include <cassert>
#include <sstream>

#include "semisplit/core/errors.hpp"

namespace semisplit {

PentagoGame::PentagoGame(int size, Strategy strategy)
    : size_(size), half_(size / 2), line_(size == 4 ? 4 : 5), strategy_(strategy) {
  if (size != 4 && size != 6) throw ConfigError("pentago: board size must be 4 or 6");
}

void PentagoGame::legal_semimoves(const State& s, std::vector<Semimove>& out) const {
  out.clear();
  if (s.result >= 0) return;
  const int cells = size_ * size_;
  const auto emit = [&out](std::uint32_t kind, int payload) {
    out.push_back(make_semimove(kind, static_cast<std::uint32_t>(payload)));
  };
  switch (s.phase) {
    case State::kNodal:
      if (strategy_ == Strategy::kOrthodox) {
        for (int sq = 0; sq < cells; ++sq) {
          if (s.cells[sq] != 0) continue;
          State placed = s;
          place(placed, sq);
          if (placed.result >= 0) {
            emit(kMove, sq << 4);
            continue;
          }
          for (int r = 0; r < kRotations; ++r) emit(kMove, sq << 4 | (r + 1));
        }
      } else if (has_shift(strategy_)) {
        for (int c = 0; c < size_; ++c) emit(kColumn, c);
      } else {
        for (int sq = 0; sq < cells; ++sq) {
          if (s.cells[sq] == 0) emit(kPlace, sq);
        }
      }
      return;
    case State::kColumnChosen:
      for (int r = 0; r < size_; ++r) {
        if (s.cells[r * size_ + s.pending] == 0) emit(kRow, r);
      }
      return;
    case State::kPlaced:
      if (has_plus(strategy_)) {
        for (int b = 0; b < 4; ++b) emit(kSubboard, b);
      } else {
        for (int r = 0; r < kRotations; ++r) emit(kRotate, r);
      }
      return;
    case State::kSubboardChosen:
      emit(kDirection, 0);
      emit(kDirection, 1);
      return;
    default:
      assert(false);
  }
}

void PentagoGame::place(State& s, int square) const {
  const auto own = static_cast<std::int8_t>(s.to_move + 1);
  s.cells[square] = own;
  ++s.filled;
  s.pending = -1;
  if (has_line(s, own)) {
    s.result = s.to_move;
    s.phase = State::kNodal;
  } else {
    s.phase = State::kPlaced;
  }
}

void PentagoGame::rotate(State& s, int rotation) const {
  const int sub = rotation / 2;
  const bool clockwise = rotation % 2 == 0;
  const int row0 = (sub / 2) * half_;
  const int col0 = (sub % 2) * half_;
  std::array<std::int8_t, 9> block{};
  for (int r = 0; r < half_; ++r) {
    for (int c = 0; c < half_; ++c) block[r * half_ + c] = s.cells[(row0 + r) * size_ + col0 + c];
  }
  // Rows grow upward, so a clockwise turn sends (r, c) to (h-1-c, r).
  for (int r = 0; r < half_; ++r) {
    for (int c = 0; c < half_; ++c) {
      const int nr = clockwise ? half_ - 1 - c : c;
      const int nc = clockwise ? r : half_ - 1 - r;
      s.cells[(row0 + nr) * size_ + col0 + nc] = block[r * half_ + c];
    }
  }
}

void PentagoGame::finish_rotation(State& s, int rotation) const {
  rotate(s, rotation);
  const bool first = has_line(s, 1);
  const bool second = has_line(s, 2);
  s.phase = State::kNodal;
  s.pending = -1;
  if (first && second) {
    s.result = State::kDraw;
  } else if (first || second) {
    s.result = first ? 0 : 1;
  } else if (s.filled == size_ * size_) {
    s.result = State::kDraw;
  } else {
    s.to_move = static_cast<std::int8_t>(1 - s.to_move);
  }
}

bool PentagoGame::has_line(const State& s, std::int8_t piece) const {
  static constexpr int kSteps[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) {
      if (s.cells[r * size_ + c] != piece) continue;
      for (const auto& step : kSteps) {
        const int er = r + step[0] * (line_ - 1);
        const int ec = c + step[1] * (line_ - 1);
        if (er < 0 || er >= size_ || ec < 0 || ec >= size_) continue;
        int k = 1;
        while (k < line_ && s.cells[(r + step[0] * k) * size_ + c + step[1] * k] == piece) ++k;
        if (k == line_) return true;
      }
    }
  }
  return false;
}

void PentagoGame::apply(State& s, Semimove m) const {
  const auto payload = static_cast<int>(semimove_payload(m));
  switch (semimove_kind(m)) {
    case kMove:
      place(s, payload >> 4);
      if ((payload & 0xF) != 0) finish_rotation(s, (payload & 0xF) - 1);
      return;
    case kPlace:
      place(s, payload);
      return;
    case kColumn:
      s.pending = static_cast<std::int8_t>(payload);
      s.phase = State::kColumnChosen;
      return;
    case kRow:
      place(s, payload * size_ + s.pending);
      return;
    case kRotate:
      finish_rotation(s, payload);
      return;
    case kSubboard:
      s.pending = static_cast<std::int8_t>(payload);
      s.phase = State::kSubboardChosen;
      return;
    case kDirection:
      finish_rotation(s, s.pending * 2 + payload);
      return;
    default:
      assert(false);
  }
}

Scores PentagoGame::scores(const State& s) const {
  if (s.result == State::kDraw) return {kMaxScore / 2, kMaxScore / 2};
  Scores out{};
  if (s.result >= 0) {
    out[s.result] = kMaxScore;
  } else {
    out[1 - s.to_move] = kMaxScore;  // unreachable: a running game always has an empty square
  }
  return out;
}

MoveKey PentagoGame::move_key(const State&, const Submove& move) const {
  int square = -1;
  int column = -1;
  int rotation = -1;  // -1 means no rotation
  int subboard = -1;
  for (Semimove m : move) {
    const auto payload = static_cast<int>(semimove_payload(m));
    switch (semimove_kind(m)) {
      case kMove:
        square = payload >> 4;
        rotation = (payload & 0xF) - 1;
        break;
      case kPlace:
        square = payload;
        break;
      case kColumn:
        column = payload;
        break;
      case kRow:
        square = payload * size_ + column;
        break;
      case kRotate:
        rotation = payload;
        break;
      case kSubboard:
        subboard = payload;
        break;
      case kDirection:
        rotation = subboard * 2 + payload;
        break;
      default:
        assert(false);
    }
  }
  return static_cast<MoveKey>(square) << 4 | static_cast<MoveKey>(rotation + 1);
}

std::string PentagoGame::square_name(int square) const {
  std::string out(1, static_cast<char>('a' + square % size_));
  out += std::to_string(square / size_ + 1);
  return out;
}

std::string PentagoGame::move_to_string(MoveKey key) const {
  std::string out = square_name(static_cast<int>(key >> 4));
  const int rotation = static_cast<int>(key & 0xF) - 1;
  if (rotation >= 0) {
    out += ' ';
    out += std::to_string(rotation / 2);
    out += rotation % 2 == 0 ? "cw" : "ccw";
  }
  return out;
}

std::string PentagoGame::dump(const State& s) const {
  std::ostringstream os;
  for (int r = size_ - 1; r >= 0; --r) {
    for (int c = 0; c < size_; ++c) os << ".WB"[s.cells[r * size_ + c]];
    os << '\n';
  }
  os << "to_move=" << int{s.to_move} << " phase=" << int{s.phase} << " pending=" << int{s.pending}
     << " result=" << int{s.result} << '\n';
  return os.str();
}

}  // namespace semisplit
