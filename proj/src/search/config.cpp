#include "semisplit/search/config.hpp"

#include "semisplit/core/errors.hpp"

namespace semisplit {

void AgentConfig::validate() const {
  const CombinationCheck check = validate_combination(tree, sim, mast, rave, mast_expansion);
  if (!check.ok) throw ConfigError(check.reason);
  if (exploration && *exploration < 0.0) throw ConfigError("exploration constant must be non-negative");
  if (epsilon < 0.0 || epsilon > 1.0) throw ConfigError("epsilon must lie in [0, 1]");
  if (decay < 0.0 || decay > 1.0) throw ConfigError("decay factor must lie in [0, 1]");
  if (rave_k <= 0.0) throw ConfigError("RAVE k must be positive");
  if (mix_threshold < 0) throw ConfigError("mix threshold must be non-negative");
}

}  // namespace semisplit
