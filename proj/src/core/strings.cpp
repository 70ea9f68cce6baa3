#include <algorithm>
#include <cctype>
#include <string>

#include "semisplit/core/errors.hpp"
#include "semisplit/core/game.hpp"
#include "semisplit/core/semimove.hpp"

namespace semisplit {

std::string to_string(const Submove& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(semimove_kind(m[i]));
    out += ':';
    out += std::to_string(semimove_payload(m[i]));
  }
  out += ']';
  return out;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kOrthodox:
      return "orthodox";
    case Strategy::kMod:
      return "Mod";
    case Strategy::kModPlus:
      return "ModPlus";
    case Strategy::kModShift:
      return "ModShift";
    case Strategy::kModPlusShift:
      return "ModPlusShift";
  }
  return "?";
}

Strategy parse_strategy(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "orthodox" || lower == "o") return Strategy::kOrthodox;
  if (lower == "mod") return Strategy::kMod;
  if (lower == "modplus") return Strategy::kModPlus;
  if (lower == "modshift") return Strategy::kModShift;
  if (lower == "modplusshift") return Strategy::kModPlusShift;
  throw ConfigError("unknown split strategy '" + text + "'; expected orthodox, Mod, ModPlus, ModShift or ModPlusShift");
}

}  // namespace semisplit
