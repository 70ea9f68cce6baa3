#include "semisplit/games/registry.hpp"

#include <fstream>
#include <sstream>

#include "semisplit/core/errors.hpp"

namespace semisplit {

namespace {

constexpr Strategy kAll[] = {Strategy::kOrthodox, Strategy::kMod, Strategy::kModPlus, Strategy::kModShift,
                             Strategy::kModPlusShift};

std::string strategy_list(const std::vector<Strategy>& strategies) {
  std::string out;
  for (Strategy s : strategies) {
    if (!out.empty()) out += ", ";
    out += to_string(s);
  }
  return out;
}

void require_supported(const std::string& name, Strategy strategy) {
  const auto supported = supported_strategies(name);
  for (Strategy s : supported) {
    if (s == strategy) return;
  }
  throw ConfigError(name + " does not support strategy " + to_string(strategy) + "; supported: " +
                    strategy_list(supported));
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ConfigError("bad " + what + " '" + text + "'");
  return value;
}

}  // namespace

std::vector<Strategy> supported_strategies(const std::string& name) {
  if (name == "breakthrough" || name == "knightthrough") {
    return {Strategy::kOrthodox, Strategy::kMod, Strategy::kModPlus, Strategy::kModShift};
  }
  if (name == "amazons" || name == "pentago") return {std::begin(kAll), std::end(kAll)};
  if (name == "synthetic") return {Strategy::kOrthodox, Strategy::kMod};
  throw ConfigError("unknown game '" + name + "'; games: breakthrough, knightthrough, amazons, pentago, synthetic");
}

AnyGame make_game(const GameSpec& spec) {
  require_supported(spec.name, spec.strategy);
  if (spec.name == "breakthrough" || spec.name == "knightthrough") {
    BreakthroughParams p;
    p.width = spec.width > 0 ? spec.width : 8;
    p.height = spec.height > 0 ? spec.height : p.width;
    p.knights = spec.name == "knightthrough";
    p.corrupt = spec.corrupt;
    return BreakthroughGame(p, spec.strategy);
  }
  if (spec.name == "amazons" || spec.name == "pentago") {
    const int n = spec.width > 0 ? spec.width : (spec.name == "amazons" ? 10 : 6);
    if (spec.height > 0 && spec.height != n) throw ConfigError(spec.name + " needs a square board");
    if (spec.name == "amazons") return AmazonsGame(n, spec.strategy);
    return PentagoGame(n, spec.strategy);
  }
  SyntheticTreeSpec tree = spec.synthetic_tree ? *spec.synthetic_tree : builtin_synthetic(spec.synthetic_builtin);
  if (spec.strategy == Strategy::kOrthodox) tree = rolled_up(tree);
  return SyntheticGame(std::move(tree), spec.strategy);
}

SplitSemantics split_semantics(const std::string& name, Strategy strategy) {
  require_supported(name, strategy);
  if (strategy == Strategy::kOrthodox) return {1, "whole move as one semimove"};
  if (name == "breakthrough" || name == "knightthrough") {
    if (has_shift(strategy)) return {3, "column, row of the piece, destination square"};
    return {2, "piece, destination square"};
  }
  if (name == "amazons") {
    switch (strategy) {
      case Strategy::kMod:
        return {3, "amazon, destination, arrow"};
      case Strategy::kModPlus:
        return {5, "amazon, direction, destination, arrow direction, arrow"};
      case Strategy::kModShift:
        return {4, "column, row of the amazon, destination, arrow"};
      default:
        return {6, "column, row, direction, destination, arrow direction, arrow"};
    }
  }
  if (name == "pentago") {
    switch (strategy) {
      case Strategy::kMod:
        return {2, "ball square, rotation"};
      case Strategy::kModPlus:
        return {3, "ball square, subboard, direction"};
      case Strategy::kModShift:
        return {3, "ball column, ball row, rotation"};
      default:
        return {4, "ball column, ball row, subboard, direction"};
    }
  }
  return {-1, "path through the explicit tree"};
}

std::vector<GameInfo> list_games() {
  std::vector<GameInfo> out;
  for (const char* name : {"breakthrough", "knightthrough", "amazons", "pentago", "synthetic"}) {
    GameInfo info{name, supported_strategies(name), ""};
    const std::string n = name;
    if (n == "breakthrough" || n == "knightthrough") {
      info.parameters = "WIDTHxHEIGHT, default 8x8, at least 3x4, at most 100 squares";
    } else if (n == "amazons") {
      info.parameters = "N (N x N board), 5..10, default 10";
    } else if (n == "pentago") {
      info.parameters = "N in {4, 6}, default 6; lines of 4 on the 4x4 board";
    } else {
      std::string trees;
      for (const auto& t : builtin_synthetic_names()) trees += (trees.empty() ? "" : ", ") + t;
      info.parameters = "built-in tree (" + trees + ") or @FILE.json";
    }
    out.push_back(std::move(info));
  }
  return out;
}

GameSpec parse_game_spec(const std::string& text, Strategy strategy) {
  GameSpec spec;
  spec.strategy = strategy;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  supported_strategies(spec.name);  // rejects unknown names
  if (colon == std::string::npos) return spec;
  const std::string param = text.substr(colon + 1);
  if (spec.name == "synthetic") {
    if (!param.empty() && param.front() == '@') {
      std::ifstream in(param.substr(1));
      if (!in) throw ConfigError("cannot read synthetic tree file '" + param.substr(1) + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      spec.synthetic_tree = parse_synthetic(buffer.str());
      spec.synthetic_builtin = param;
    } else {
      builtin_synthetic(param);
      spec.synthetic_builtin = param;
    }
    return spec;
  }
  const auto x = param.find('x');
  if (x == std::string::npos) {
    spec.width = spec.height = parse_int(param, "board size");
  } else {
    spec.width = parse_int(param.substr(0, x), "board width");
    spec.height = parse_int(param.substr(x + 1), "board height");
  }
  return spec;
}

std::string render_game_spec(const GameSpec& spec) {
  if (spec.name == "synthetic") return spec.name + ":" + spec.synthetic_builtin;
  if (spec.width == 0) return spec.name;
  if (spec.height == 0 || spec.height == spec.width) return spec.name + ":" + std::to_string(spec.width);
  return spec.name + ":" + std::to_string(spec.width) + "x" + std::to_string(spec.height);
}

}  // namespace semisplit
