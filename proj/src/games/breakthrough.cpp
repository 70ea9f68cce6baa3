#include "semisplit/games/breakthrough.hpp"

#include <cassert>
#include <sstream>

#include "semisplit/core/errors.hpp"

namespace semisplit {

namespace {

constexpr std::int8_t piece_of(PlayerId p) { return static_cast<std::int8_t>(p + 1); }

}  // namespace

BreakthroughGame::BreakthroughGame(BreakthroughParams params, Strategy strategy)
    : params_(params), strategy_(strategy), cells_(params.width * params.height) {
  if (params_.width < 3 || params_.height < 4 || cells_ > State::kMaxCells) {
    throw ConfigError(name() + ": board must be at least 3x4 and at most " + std::to_string(State::kMaxCells) +
                      " squares");
  }
  if (strategy_ == Strategy::kModPlusShift) {
    throw ConfigError(name() + " supports strategies orthodox, Mod, ModPlus (same as Mod), ModShift");
  }
}

BreakthroughState BreakthroughGame::initial_state() const {
  State s;
  const int w = params_.width;
  for (int c = 0; c < w; ++c) {
    s.cells[c] = piece_of(0);
    s.cells[w + c] = piece_of(0);
    s.cells[(params_.height - 1) * w + c] = piece_of(1);
    s.cells[(params_.height - 2) * w + c] = piece_of(1);
  }
  return s;
}

namespace {

template <typename F>
void for_each_destination(const BreakthroughState& s, const BreakthroughParams& p, int square, PlayerId player,
                          F&& visit) {
  const int w = p.width;
  const int row = square / w;
  const int col = square % w;
  const int forward = player == 0 ? 1 : -1;
  const std::int8_t own = piece_of(player);
  if (!p.knights) {
    const int r = row + forward;
    if (r < 0 || r >= p.height) return;
    const int base = r * w;
    if (col > 0 && s.cells[base + col - 1] != own) visit(base + col - 1);
    if (s.cells[base + col] == 0) visit(base + col);
    if (col + 1 < w && s.cells[base + col + 1] != own) visit(base + col + 1);
    return;
  }
  static constexpr int kJumps[4][2] = {{1, -2}, {2, -1}, {2, 1}, {1, 2}};
  for (const auto& jump : kJumps) {
    const int r = row + jump[0] * forward;
    const int c = col + jump[1];
    if (r < 0 || r >= p.height || c < 0 || c >= w) continue;
    if (s.cells[r * w + c] != own) visit(r * w + c);
  }
}

}  // namespace

void BreakthroughGame::destinations(const State& s, int square, PlayerId player, std::vector<int>& out) const {
  out.clear();
  for_each_destination(s, params_, square, player, [&](int to) { out.push_back(to); });
}

void BreakthroughGame::legal_semimoves(const State& s, std::vector<Semimove>& out) const {
  out.clear();
  if (s.winner >= 0) return;
  const std::int8_t own = piece_of(s.to_move);
  const int w = params_.width;
  switch (s.phase) {
    case State::kNodal:
      if (strategy_ == Strategy::kOrthodox) {
        for (int sq = 0; sq < cells_; ++sq) {
          if (s.cells[sq] != own) continue;
          for_each_destination(s, params_, sq, s.to_move, [&](int to) {
            out.push_back(make_semimove(kMove, static_cast<std::uint32_t>(sq << 8 | to)));
          });
        }
      } else if (has_shift(strategy_)) {
        for (int c = 0; c < w; ++c) out.push_back(make_semimove(kColumn, static_cast<std::uint32_t>(c)));
      } else {
        for (int sq = 0; sq < cells_; ++sq) {
          if (s.cells[sq] == own) out.push_back(make_semimove(kLift, static_cast<std::uint32_t>(sq)));
        }
      }
      return;
    case State::kColumnChosen:
      for (int r = 0; r < params_.height; ++r) {
        if (s.cells[r * w + s.selected] == own) out.push_back(make_semimove(kRow, static_cast<std::uint32_t>(r)));
      }
      return;
    case State::kLifted: {
      bool skip_first = params_.corrupt && s.selected % w == 0;
      for_each_destination(s, params_, s.selected, s.to_move, [&](int to) {
        if (skip_first) {
          skip_first = false;
          return;
        }
        out.push_back(make_semimove(kDrop, static_cast<std::uint32_t>(to)));
      });
      return;
    }
    default:
      assert(false);
  }
}

void BreakthroughGame::drop(State& s, int from, int to) const {
  s.cells[from] = 0;
  s.cells[to] = piece_of(s.to_move);
  const int row = to / params_.width;
  if (row == (s.to_move == 0 ? params_.height - 1 : 0)) {
    s.winner = s.to_move;
  } else {
    s.to_move = static_cast<std::int8_t>(1 - s.to_move);
  }
  s.phase = State::kNodal;
  s.selected = -1;
}

void BreakthroughGame::apply(State& s, Semimove m) const {
  const auto payload = static_cast<int>(semimove_payload(m));
  switch (semimove_kind(m)) {
    case kMove:
      drop(s, payload >> 8, payload & 0xFF);
      return;
    case kColumn:
      s.phase = State::kColumnChosen;
      s.selected = static_cast<std::int8_t>(payload);
      return;
    case kRow: {
      const int square = payload * params_.width + s.selected;
      s.cells[square] = 0;
      s.phase = State::kLifted;
      s.selected = static_cast<std::int8_t>(square);
      return;
    }
    case kLift:
      s.cells[payload] = 0;
      s.phase = State::kLifted;
      s.selected = static_cast<std::int8_t>(payload);
      return;
    case kDrop:
      drop(s, s.selected, payload);
      return;
    default:
      assert(false);
  }
}

Scores BreakthroughGame::scores(const State& s) const {
  // Without a winner the play ended because the player to move is stuck.
  const PlayerId winner = s.winner >= 0 ? s.winner : 1 - s.to_move;
  Scores out{};
  out[winner] = kMaxScore;
  return out;
}

MoveKey BreakthroughGame::move_key(const State&, const Submove& move) const {
  int from = -1;
  int to = -1;
  int column = -1;
  for (Semimove m : move) {
    const auto payload = static_cast<int>(semimove_payload(m));
    switch (semimove_kind(m)) {
      case kMove:
        from = payload >> 8;
        to = payload & 0xFF;
        break;
      case kLift:
        from = payload;
        break;
      case kColumn:
        column = payload;
        break;
      case kRow:
        from = payload * params_.width + column;
        break;
      case kDrop:
        to = payload;
        break;
      default:
        assert(false);
    }
  }
  return static_cast<MoveKey>(from) << 8 | static_cast<MoveKey>(to);
}

std::string BreakthroughGame::square_name(int square) const {
  std::string out(1, static_cast<char>('a' + square % params_.width));
  out += std::to_string(square / params_.width + 1);
  return out;
}

std::string BreakthroughGame::move_to_string(MoveKey key) const {
  return square_name(static_cast<int>(key >> 8)) + "-" + square_name(static_cast<int>(key & 0xFF));
}

std::string BreakthroughGame::dump(const State& s) const {
  std::ostringstream os;
  for (int r = params_.height - 1; r >= 0; --r) {
    for (int c = 0; c < params_.width; ++c) os << ".WB"[s.cells[r * params_.width + c]];
    os << '\n';
  }
  os << "to_move=" << int{s.to_move} << " phase=" << int{s.phase} << " selected=" << int{s.selected}
     << " winner=" << int{s.winner} << '\n';
  return os.str();
}

}  // namespace semisplit
