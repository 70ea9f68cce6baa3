#pragma once

#include <string>

namespace semisplit {

enum class TreeDesign { kOrthodox, kSemisplitRaw, kSemisplitNodal, kRollUpNodal };
enum class SimDesign { kOrthodox, kSemisplit };
enum class HeuristicVariant { kNone, kSplit, kJoin, kContext, kMix };

// Short names used by agent specs: O, S-raw, S-nodal, R-nodal; O, S; none,
// split, join, context, mix. Parsing is case-insensitive and throws ConfigError.
std::string to_string(TreeDesign d);
std::string to_string(SimDesign d);
std::string to_string(HeuristicVariant v);
TreeDesign parse_tree_design(const std::string& text);
SimDesign parse_sim_design(const std::string& text);
HeuristicVariant parse_heuristic_variant(const std::string& text);

constexpr bool is_semisplit_tree(TreeDesign d) { return d != TreeDesign::kOrthodox; }
constexpr bool uses_nodal_expansion(TreeDesign d) {
  return d == TreeDesign::kSemisplitNodal || d == TreeDesign::kRollUpNodal;
}

struct CombinationCheck {
  bool ok = true;
  std::string reason;  // why the combination is rejected
};

// The table of available heuristic variants per tree/simulation design.
// `mast_in_expansion` asks for MAST to choose untried edges as well, which
// MAST-join cannot do for a semisplit or roll-up tree.
CombinationCheck validate_combination(TreeDesign tree, SimDesign sim, HeuristicVariant mast, HeuristicVariant rave,
                                      bool mast_in_expansion = false);

}  // namespace semisplit
