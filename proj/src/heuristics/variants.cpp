#include "semisplit/heuristics/variants.hpp"

#include <algorithm>
#include <cctype>

#include "semisplit/core/errors.hpp"

namespace semisplit {

namespace {

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  return text;
}

std::string row_name(TreeDesign tree, SimDesign sim) {
  return to_string(tree) + " tree with " + (sim == SimDesign::kOrthodox ? "orthodox" : "semisplit") + " simulations";
}

CombinationCheck reject(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

std::string to_string(TreeDesign d) {
  switch (d) {
    case TreeDesign::kOrthodox:
      return "O";
    case TreeDesign::kSemisplitRaw:
      return "S-raw";
    case TreeDesign::kSemisplitNodal:
      return "S-nodal";
    case TreeDesign::kRollUpNodal:
      return "R-nodal";
  }
  return "?";
}

std::string to_string(SimDesign d) { return d == SimDesign::kOrthodox ? "O" : "S"; }

std::string to_string(HeuristicVariant v) {
  switch (v) {
    case HeuristicVariant::kNone:
      return "none";
    case HeuristicVariant::kSplit:
      return "split";
    case HeuristicVariant::kJoin:
      return "join";
    case HeuristicVariant::kContext:
      return "context";
    case HeuristicVariant::kMix:
      return "mix";
  }
  return "?";
}

TreeDesign parse_tree_design(const std::string& text) {
  const std::string t = lower(text);
  if (t == "o" || t == "orthodox") return TreeDesign::kOrthodox;
  if (t == "s-raw" || t == "s" || t == "semisplit-raw") return TreeDesign::kSemisplitRaw;
  if (t == "s-nodal" || t == "semisplit-nodal") return TreeDesign::kSemisplitNodal;
  if (t == "r-nodal" || t == "rollup-nodal" || t == "roll-up") return TreeDesign::kRollUpNodal;
  throw ConfigError("unknown tree design '" + text + "'; expected O, S-raw, S-nodal or R-nodal");
}

SimDesign parse_sim_design(const std::string& text) {
  const std::string t = lower(text);
  if (t == "o" || t == "orthodox") return SimDesign::kOrthodox;
  if (t == "s" || t == "semisplit") return SimDesign::kSemisplit;
  throw ConfigError("unknown simulation design '" + text + "'; expected O or S");
}

HeuristicVariant parse_heuristic_variant(const std::string& text) {
  const std::string t = lower(text);
  if (t == "none") return HeuristicVariant::kNone;
  if (t == "split") return HeuristicVariant::kSplit;
  if (t == "join") return HeuristicVariant::kJoin;
  if (t == "context") return HeuristicVariant::kContext;
  if (t == "mix") return HeuristicVariant::kMix;
  throw ConfigError("unknown heuristic variant '" + text + "'; expected none, split, join, context or mix");
}

CombinationCheck validate_combination(TreeDesign tree, SimDesign sim, HeuristicVariant mast, HeuristicVariant rave,
                                      bool mast_in_expansion) {
  const bool orthodox_tree = tree == TreeDesign::kOrthodox;
  const bool rollup_tree = tree == TreeDesign::kRollUpNodal;
  const bool orthodox_sim = sim == SimDesign::kOrthodox;
  const std::string row = row_name(tree, sim);

  switch (mast) {
    case HeuristicVariant::kNone:
      if (mast_in_expansion) return reject("MAST in expansion needs a MAST variant");
      break;
    case HeuristicVariant::kSplit:
    case HeuristicVariant::kMix:
      break;
    case HeuristicVariant::kJoin:
      if (!orthodox_sim) return reject("MAST-join needs orthodox simulations (" + row + ")");
      if (!orthodox_tree && mast_in_expansion) {
        return reject("MAST-join works with a " + to_string(tree) + " tree only without MAST in expansion");
      }
      break;
    case HeuristicVariant::kContext:
      if (orthodox_tree && orthodox_sim) {
        return reject("MAST-context is equivalent to MAST-join but slower with an orthodox tree and orthodox "
                      "simulations; use MAST-join");
      }
      break;
  }

  switch (rave) {
    case HeuristicVariant::kNone:
      break;
    case HeuristicVariant::kSplit:
      if (orthodox_tree || rollup_tree) return reject("RAVE-split needs a semisplit tree (" + row + ")");
      break;
    case HeuristicVariant::kJoin:
      if (!orthodox_tree) return reject("RAVE-join needs an orthodox tree (" + row + ")");
      break;
    case HeuristicVariant::kContext:
      if (orthodox_tree) {
        return reject("RAVE-context is equivalent to RAVE-join but slower with an orthodox tree; use RAVE-join");
      }
      break;
    case HeuristicVariant::kMix:
      if (orthodox_tree || rollup_tree) {
        return reject("RAVE-mix needs both RAVE-split and RAVE-context, so a semisplit tree (" + row + ")");
      }
      break;
  }
  return {};
}

}  // namespace semisplit
