#pragma once

#include <array>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/equivalence.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/search/agent.hpp"
#include "semisplit/search/budget.hpp"

namespace semisplit {

// A participant of a play, using its own encoding of the shared rules.
template <SemisplitGame G>
class Player {
 public:
  using State = typename G::State;
  virtual ~Player() = default;
  [[nodiscard]] virtual const G& game() const = 0;
  // Nullopt resigns.
  virtual std::optional<Submove> choose(const State& state, Budget& budget) = 0;
  virtual void observe(const State& /*before*/, const Submove& /*move*/) {}
  [[nodiscard]] virtual TurnStats last_turn() const { return {}; }
};

template <SemisplitGame G>
class MctsPlayer final : public Player<G> {
 public:
  using State = typename G::State;
  MctsPlayer(G game, AgentConfig config, std::uint64_t seed) : agent_(std::move(game), config, seed) {}

  [[nodiscard]] const G& game() const override { return agent_.game(); }
  std::optional<Submove> choose(const State& state, Budget& budget) override {
    return agent_.choose_move(state, budget);
  }
  void observe(const State& before, const Submove& move) override { agent_.observe_move(before, move); }
  [[nodiscard]] TurnStats last_turn() const override { return agent_.last_turn(); }
  [[nodiscard]] Agent<G>& agent() { return agent_; }

 private:
  Agent<G> agent_;
};

// Test double that resigns at its first turn.
template <SemisplitGame G>
class ResigningPlayer final : public Player<G> {
 public:
  using State = typename G::State;
  explicit ResigningPlayer(G game) : game_(std::move(game)) {}
  [[nodiscard]] const G& game() const override { return game_; }
  std::optional<Submove> choose(const State&, Budget&) override { return std::nullopt; }

 private:
  G game_;
};

// Results of one play; arrays are indexed by seat (player id).
struct PlayOutcome {
  Scores scores{};
  int turns = 0;
  std::optional<int> resigned;
  std::vector<std::string> moves;
  std::array<std::uint64_t, 2> nodal_states{};
  std::array<std::uint64_t, 2> iterations{};
  std::array<std::uint64_t, 2> max_turn_states{};
  std::array<int, 2> seat_turns{};
  std::array<double, 2> seconds{};
};

namespace detail {

template <SemisplitGame G>
std::optional<Submove> translate(const G& game, const typename G::State& state, MoveKey key) {
  std::vector<Submove> moves;
  enumerate_moves(game, state, moves);
  for (const Submove& m : moves) {
    if (game.move_key(state, m) == key) return m;
  }
  return std::nullopt;
}

}  // namespace detail

// Alternates turns until the play ends. Each move is translated into the
// other player's encoding (and into `oracle`'s, when given) through its move
// key; a move unknown to any of them aborts with a RuntimeFailure carrying
// both positions.
template <SemisplitGame G>
PlayOutcome play_game(std::array<Player<G>*, 2> seats, const BudgetSpec& budget_spec, const G* oracle = nullptr,
                      int max_turns = 100000) {
  using State = typename G::State;
  PlayOutcome out;
  std::array<State, 2> states{seats[0]->game().initial_state(), seats[1]->game().initial_state()};
  std::optional<State> oracle_state;
  if (oracle != nullptr) oracle_state = oracle->initial_state();

  const G& referee = seats[0]->game();
  while (!is_play_end(referee, states[0])) {
    if (out.turns >= max_turns) throw RuntimeFailure("play exceeded " + std::to_string(max_turns) + " turns");
    const auto mover = static_cast<std::size_t>(referee.current_player(states[0]));
    const std::size_t other = 1 - mover;
    const G& mover_game = seats[mover]->game();

    Budget budget(budget_spec);
    const std::optional<Submove> move = seats[mover]->choose(states[mover], budget);
    const TurnStats stats = seats[mover]->last_turn();
    out.nodal_states[mover] += stats.nodal_states;
    out.iterations[mover] += stats.iterations;
    out.max_turn_states[mover] = std::max(out.max_turn_states[mover], stats.nodal_states);
    out.seconds[mover] += budget.elapsed_seconds();
    ++out.seat_turns[mover];
    if (!move) {
      out.resigned = static_cast<int>(mover);
      out.scores[mover] = 0.0;
      out.scores[other] = kMaxScore;
      return out;
    }

    const MoveKey key = mover_game.move_key(states[mover], *move);
    std::array<Submove, 2> encoded;
    encoded[mover] = *move;
    const auto own = detail::translate(mover_game, states[mover], key);
    const auto theirs = detail::translate(seats[other]->game(), states[other], key);
    if (!own || !(*own == *move) || !theirs) {
      std::ostringstream msg;
      msg << "illegal move " << to_string(*move) << " (" << mover_game.move_to_string(key) << ") by player "
          << mover << " at turn " << out.turns << "\n"
          << mover_game.dump(states[mover]);
      throw RuntimeFailure(msg.str());
    }
    encoded[other] = *theirs;
    if (oracle_state) {
      const auto checked = detail::translate(*oracle, *oracle_state, key);
      if (!checked) {
        throw RuntimeFailure("move " + mover_game.move_to_string(key) + " is not legal in the orthodox encoding\n" +
                             oracle->dump(*oracle_state));
      }
      apply_submove(*oracle, *oracle_state, *checked);
    }

    out.moves.push_back(mover_game.move_to_string(key));
    for (std::size_t p = 0; p < 2; ++p) {
      const State before = states[p];
      apply_submove(seats[p]->game(), states[p], encoded[p]);
      seats[p]->observe(before, encoded[p]);
    }
    if (!same_position(seats[0]->game(), states[0], seats[1]->game(), states[1])) {
      throw RuntimeFailure("encodings disagree after " + out.moves.back() + "\n" + seats[0]->game().dump(states[0]) +
                           "---\n" + seats[1]->game().dump(states[1]));
    }
    ++out.turns;
  }
  out.scores = referee.scores(states[0]);
  return out;
}

}  // namespace semisplit
