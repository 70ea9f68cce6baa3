#pragma once

#include <cassert>
#include <cstdint>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "semisplit/core/game.hpp"
#include "semisplit/core/rng.hpp"
#include "semisplit/core/semimove.hpp"

namespace semisplit {

// Work counters of random simulations. "States" are states computed by
// applying a semimove, including dead ones; generated semimoves are the sizes
// of all legal-semimove lists computed.
struct SimCounters {
  std::uint64_t nodal_states = 0;
  std::uint64_t all_states = 0;
  std::uint64_t semimoves_generated = 0;

  void on_generated(std::size_t n) { semimoves_generated += n; }
  void on_state(bool nodal) {
    ++all_states;
    if (nodal) ++nodal_states;
  }
};

// One applied semimove of an iteration, with the player who chose it.
struct TraceStep {
  Semimove move;
  PlayerId player = 0;
  bool ends_nodal = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using Trace = std::vector<TraceStep>;

// Per-depth semimove buffers reused across backtracking searches. A search
// never goes deeper than the longest submove.
class SemimoveBuffers {
 public:
  std::vector<Semimove>& at(std::size_t depth) {
    assert(depth < levels_.size());
    return levels_[depth];
  }

 private:
  std::array<std::vector<Semimove>, Submove::kMaxLength> levels_;
};

namespace detail {

template <SemisplitGame G, typename Probe>
bool random_move_from(const G& game, typename G::State& state, Rng& rng, Probe& probe, Submove& out,
                      SemimoveBuffers& buffers, std::size_t depth) {
  std::vector<Semimove>& moves = buffers.at(depth);
  game.legal_semimoves(state, moves);
  probe.on_generated(moves.size());
  // Incremental Fisher-Yates: the i-th draw is the i-th element of a uniform
  // shuffle, but only the tried prefix is ever paid for.
  std::size_t remaining = moves.size();
  while (remaining > 0) {
    const std::size_t pick = rng.below(static_cast<std::uint32_t>(remaining));
    std::swap(moves[pick], moves[remaining - 1]);
    --remaining;
    const Semimove m = moves[remaining];
    typename G::State child = state;
    game.apply(child, m);
    const bool nodal = game.is_nodal(child);
    probe.on_state(nodal);
    out.push_back(m);
    if (nodal || random_move_from(game, child, rng, probe, out, buffers, depth + 1)) {
      state = std::move(child);
      return true;
    }
    out.pop_back();
  }
  return false;
}

}  // namespace detail

// Draws a move by backtracking over shuffled semimoves. On success the state
// is advanced to the reached nodal state and the move is appended to `out`.
// Fails exactly when no nodal state is reachable (dead state or no legal
// move); the state is then unchanged.
template <SemisplitGame G, typename Probe>
bool semisplit_random_move(const G& game, typename G::State& state, Rng& rng, Probe& probe, Submove& out,
                           SemimoveBuffers& buffers) {
  assert(!(game.is_nodal(state) && game.is_terminal(state)));
  const std::size_t mark = out.size();
  const bool found = detail::random_move_from(game, state, rng, probe, out, buffers, 0);
  assert(found || out.size() == mark);
  (void)mark;
  return found;
}

template <SemisplitGame G>
std::optional<Submove> semisplit_random_move(const G& game, const typename G::State& state, Rng& rng) {
  SimCounters counters;
  SemimoveBuffers buffers;
  typename G::State s = state;
  Submove m;
  if (!semisplit_random_move(game, s, rng, counters, m, buffers)) return std::nullopt;
  return m;
}

template <SemisplitGame G>
void append_trace(const Submove& move, PlayerId player, Trace& trace) {
  for (std::size_t i = 0; i < move.size(); ++i) {
    trace.push_back(TraceStep{move[i], player, i + 1 == move.size()});
  }
}

// Plays moves chosen by `choose(state, out)` until the play ends. Returns
// nullopt iff the starting state is dead; a nodal state without a legal move
// ends the play with its scores.
template <SemisplitGame G, typename Chooser>
std::optional<Scores> run_simulation(const G& game, typename G::State state, Chooser&& choose, Trace* trace) {
  Submove move;
  while (!(game.is_nodal(state) && game.is_terminal(state))) {
    const PlayerId player = game.current_player(state);
    const bool was_nodal = game.is_nodal(state);
    move.clear();
    if (!choose(state, move)) {
      if (was_nodal) return game.scores(state);
      return std::nullopt;
    }
    if (trace != nullptr) append_trace<G>(move, player, *trace);
  }
  return game.scores(state);
}

template <SemisplitGame G, typename Probe>
std::optional<Scores> semisplit_simulation(const G& game, const typename G::State& state, Rng& rng, Probe& probe,
                                           SemimoveBuffers& buffers, Trace* trace = nullptr) {
  return run_simulation(
      game, state,
      [&](typename G::State& s, Submove& out) { return semisplit_random_move(game, s, rng, probe, out, buffers); },
      trace);
}

template <SemisplitGame G>
std::optional<Scores> semisplit_simulation(const G& game, const typename G::State& state, Rng& rng,
                                           SimCounters* counters = nullptr) {
  SimCounters local;
  SemimoveBuffers buffers;
  return semisplit_simulation(game, state, rng, counters != nullptr ? *counters : local, buffers);
}

namespace detail {

template <SemisplitGame G>
void enumerate_from(const G& game, const typename G::State& state, Submove& prefix, std::vector<Submove>& out) {
  std::vector<Semimove> moves;
  game.legal_semimoves(state, moves);
  for (Semimove m : moves) {
    typename G::State child = state;
    game.apply(child, m);
    prefix.push_back(m);
    if (game.is_nodal(child)) {
      out.push_back(prefix);
    } else {
      enumerate_from(game, child, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace detail

// Exhaustive depth-first traversal with dead-branch pruning: every submove
// from `state` to the next nodal state. For a nodal state this is the legal
// move set of the rolled-up game, in canonical (generation) order.
template <SemisplitGame G>
void enumerate_moves(const G& game, const typename G::State& state, std::vector<Submove>& out) {
  out.clear();
  if (game.is_nodal(state) && game.is_terminal(state)) return;
  if (game.single_semimove_moves() && game.is_nodal(state)) {
    std::vector<Semimove> moves;
    game.legal_semimoves(state, moves);
    out.reserve(moves.size());
    for (Semimove m : moves) out.emplace_back(m);
    return;
  }
  Submove prefix;
  detail::enumerate_from(game, state, prefix, out);
}

template <SemisplitGame G>
std::vector<Submove> enumerate_moves(const G& game, const typename G::State& state) {
  std::vector<Submove> out;
  enumerate_moves(game, state, out);
  return out;
}

template <SemisplitGame G>
void apply_submove(const G& game, typename G::State& state, const Submove& move) {
  for (Semimove m : move) game.apply(state, m);
}

// True when the state ends the play: rule-based terminal, or nodal with no
// legal move.
template <SemisplitGame G>
bool is_play_end(const G& game, const typename G::State& state) {
  if (!game.is_nodal(state)) return false;
  if (game.is_terminal(state)) return true;
  return enumerate_moves(game, state).empty();
}

}  // namespace semisplit
