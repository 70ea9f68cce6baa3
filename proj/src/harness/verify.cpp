#include "semisplit/harness/verify.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/core/rng.hpp"

namespace semisplit {

namespace {

template <typename G>
class CompletenessSweep {
 public:
  CompletenessSweep(const G& game, std::uint64_t seed) : game_(game), rng_(seed) {}

  CompletenessReport run(std::uint64_t calls) {
    typename G::State s = game_.initial_state();
    std::vector<Submove> moves;
    std::vector<Semimove> semimoves;
    while (report_.calls < calls && report_.ok()) {
      enumerate_moves(game_, s, moves);
      if (game_.is_terminal(s) || moves.empty()) {
        if (!game_.is_terminal(s)) check(s, moves);
        s = game_.initial_state();
        continue;
      }
      check(s, moves);
      // One intermediate state below: the first semimove of a random
      // semimove, dead or alive.
      game_.legal_semimoves(s, semimoves);
      typename G::State mid = s;
      game_.apply(mid, semimoves[rng_.below(static_cast<std::uint32_t>(semimoves.size()))]);
      if (!game_.is_nodal(mid) && report_.calls < calls) {
        std::vector<Submove> below;
        enumerate_moves(game_, mid, below);
        check(mid, below);
      }
      apply_submove(game_, s, moves[rng_.below(static_cast<std::uint32_t>(moves.size()))]);
    }
    return report_;
  }

 private:
  void check(const typename G::State& s, const std::vector<Submove>& oracle) {
    if (!report_.ok()) return;
    ++report_.calls;
    const auto drawn = semisplit_random_move(game_, s, rng_);
    if (!drawn) {
      if (oracle.empty()) {
        ++report_.absent;
      } else {
        fail(s, "no move drawn but " + std::to_string(oracle.size()) + " exist");
      }
      return;
    }
    if (std::find(oracle.begin(), oracle.end(), *drawn) == oracle.end()) {
      fail(s, "drawn move is not among the " + std::to_string(oracle.size()) + " enumerated moves");
    }
  }

  void fail(const typename G::State& s, const std::string& what) {
    report_.failure = what + " (call " + std::to_string(report_.calls) + ")\n" + game_.dump(s);
  }

  const G& game_;
  Rng rng_;
  CompletenessReport report_;
};

}  // namespace

CompletenessReport check_random_move_completeness(const AnyGame& game, std::uint64_t calls, std::uint64_t seed) {
  return visit_game(game, [&](const auto& g) {
    CompletenessSweep sweep(g, seed);
    return sweep.run(calls);
  });
}

VerifyReport verify_game(const GameSpec& spec, int plies, std::uint64_t random_calls, std::uint64_t seed) {
  VerifyReport report;
  report.game = render_game_spec(spec);
  report.strategy = spec.strategy;
  report.plies = plies;
  GameSpec orthodox_spec = spec;
  orthodox_spec.strategy = Strategy::kOrthodox;
  orthodox_spec.corrupt = false;
  const AnyGame orthodox = make_game(orthodox_spec);
  const AnyGame split = make_game(spec);
  report.equivalence = std::visit(
      [&](const auto& a, const auto& b) -> EquivalenceReport {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, std::decay_t<decltype(b)>>) {
          return rolled_up_equivalence(a, b, plies);
        } else {
          throw RuntimeFailure("encodings of one game have different types");
        }
      },
      orthodox, split);
  if (random_calls > 0) report.completeness = check_random_move_completeness(split, random_calls, seed);
  return report;
}

std::string VerifyReport::describe() const {
  std::ostringstream os;
  os << game << " " << to_string(strategy) << ", " << plies << " plies: " << equivalence.describe();
  if (completeness.calls > 0) {
    os << "; random-move completeness: " << completeness.calls << " calls, " << completeness.absent << " absent";
    if (!completeness.ok()) os << ", FAILED: " << completeness.failure;
  }
  return os.str();
}

}  // namespace semisplit
