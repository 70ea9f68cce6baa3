#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semisplit/core/game.hpp"
#include "semisplit/games/amazons.hpp"
#include "semisplit/games/breakthrough.hpp"
#include "semisplit/games/pentago.hpp"
#include "semisplit/games/synthetic.hpp"

namespace semisplit {

struct GameSpec {
  std::string name = "breakthrough";
  Strategy strategy = Strategy::kOrthodox;
  int width = 0;  // 0 selects the game's default size
  int height = 0;
  // Synthetic games: a built-in tree name or a tree given inline.
  std::string synthetic_builtin = "fig1";
  std::optional<SyntheticTreeSpec> synthetic_tree;
  bool corrupt = false;  // Breakthrough test hook, see BreakthroughParams
};

using AnyGame = std::variant<BreakthroughGame, AmazonsGame, PentagoGame, SyntheticGame>;

// Throws ConfigError for unknown games, unsupported strategies (naming the
// supported ones) and bad sizes.
AnyGame make_game(const GameSpec& spec);

// Nominal number of semimoves in one move; 1 for orthodox encodings. Pentago
// moves that win by the placement alone are one semimove shorter.
struct SplitSemantics {
  int semimoves_per_move = 1;  // -1 when it varies (synthetic)
  std::string description;
};
SplitSemantics split_semantics(const std::string& name, Strategy strategy);

struct GameInfo {
  std::string name;
  std::vector<Strategy> strategies;
  std::string parameters;
};
std::vector<GameInfo> list_games();

std::vector<Strategy> supported_strategies(const std::string& name);

// "breakthrough" etc. with optional size suffix: "amazons:8", "breakthrough:6x5".
GameSpec parse_game_spec(const std::string& text, Strategy strategy);
std::string render_game_spec(const GameSpec& spec);

template <typename F>
decltype(auto) visit_game(const AnyGame& game, F&& f) {
  return std::visit(std::forward<F>(f), game);
}

}  // namespace semisplit
