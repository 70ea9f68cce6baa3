#pragma once

#include <optional>

#include "semisplit/core/game.hpp"
#include "semisplit/heuristics/mast.hpp"
#include "semisplit/heuristics/rave.hpp"
#include "semisplit/heuristics/variants.hpp"

namespace semisplit {

struct AgentConfig {
  TreeDesign tree = TreeDesign::kOrthodox;
  SimDesign sim = SimDesign::kOrthodox;
  Strategy strategy = Strategy::kOrthodox;
  HeuristicVariant mast = HeuristicVariant::kNone;
  HeuristicVariant rave = HeuristicVariant::kNone;
  std::optional<double> exploration;  // unset: 0.4, or 0.2 with RAVE
  double epsilon = 0.4;
  double decay = 0.2;
  double rave_k = kDefaultRaveK;
  int mix_threshold = kDefaultMixThreshold;
  bool tree_reuse = false;
  bool mast_expansion = false;

  [[nodiscard]] double exploration_constant() const {
    if (exploration) return *exploration;
    return rave != HeuristicVariant::kNone ? 0.2 : 0.4;
  }

  // Throws ConfigError for invalid combinations or parameter ranges.
  void validate() const;

  friend bool operator==(const AgentConfig&, const AgentConfig&) = default;
};

}  // namespace semisplit
