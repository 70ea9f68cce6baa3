#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "semisplit/core/semimove.hpp"

namespace semisplit {

enum class Strategy { kOrthodox, kMod, kModPlus, kModShift, kModPlusShift };

std::string to_string(Strategy s);
// Case-insensitive; throws ConfigError on unknown names.
Strategy parse_strategy(const std::string& text);

constexpr bool has_plus(Strategy s) { return s == Strategy::kModPlus || s == Strategy::kModPlusShift; }
constexpr bool has_shift(Strategy s) { return s == Strategy::kModShift || s == Strategy::kModPlusShift; }

// A semisplit game: value-type states plus an immutable rule object.
//
// States are duplicated rather than undone: apply() mutates a copy the caller
// owns, so the source state is left untouched. Nodal states of every encoding
// of the same rules share one representation, so they compare equal across
// encodings.
//
// is_terminal() reports rule-based game end. A nodal state can also end the
// play by having no legal move; scores() is defined for both cases.
template <typename G>
concept SemisplitGame = std::copy_constructible<G> && requires(const G& game, typename G::State& state,
                                                                const typename G::State& cstate,
                                                                std::vector<Semimove>& out, Semimove m,
                                                                const Submove& submove, MoveKey key) {
  typename G::State;
  requires std::equality_comparable<typename G::State>;
  { game.initial_state() } -> std::same_as<typename G::State>;
  { game.legal_semimoves(cstate, out) } -> std::same_as<void>;
  { game.apply(state, m) } -> std::same_as<void>;
  { game.is_nodal(cstate) } -> std::same_as<bool>;
  { game.is_terminal(cstate) } -> std::same_as<bool>;
  { game.scores(cstate) } -> std::same_as<Scores>;
  { game.current_player(cstate) } -> std::same_as<PlayerId>;
  { game.player_count() } -> std::same_as<int>;
  { game.single_semimove_moves() } -> std::same_as<bool>;
  { game.move_key(cstate, submove) } -> std::same_as<MoveKey>;
  { game.move_to_string(key) } -> std::same_as<std::string>;
  { game.dump(cstate) } -> std::same_as<std::string>;
  { game.name() } -> std::same_as<std::string>;
  { game.strategy() } -> std::same_as<Strategy>;
};

}  // namespace semisplit
