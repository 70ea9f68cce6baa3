#pragma once

#include <cstdint>
#include <string>

#include "semisplit/core/equivalence.hpp"
#include "semisplit/games/registry.hpp"

namespace semisplit {

// Random-move completeness over states reached by random play: at each
// sampled nodal state, and at one intermediate state below it, the
// backtracking random move must be absent exactly when enumeration finds
// nothing and must otherwise be one of the enumerated moves.
struct CompletenessReport {
  std::uint64_t calls = 0;
  std::uint64_t absent = 0;  // calls that correctly found no move
  std::string failure;       // empty when every call agreed with the oracle

  [[nodiscard]] bool ok() const { return failure.empty(); }
};

struct VerifyReport {
  std::string game;  // rendered game spec
  Strategy strategy = Strategy::kOrthodox;
  int plies = 0;
  EquivalenceReport equivalence;
  CompletenessReport completeness;

  [[nodiscard]] bool ok() const { return equivalence.equivalent && completeness.ok(); }
  [[nodiscard]] std::string describe() const;
};

CompletenessReport check_random_move_completeness(const AnyGame& game, std::uint64_t calls, std::uint64_t seed);

// Equivalence of `spec` against the orthodox encoding of the same game to
// `plies` full moves, then the completeness sweep (skipped when calls is 0).
VerifyReport verify_game(const GameSpec& spec, int plies, std::uint64_t random_calls, std::uint64_t seed);

}  // namespace semisplit
