#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/game.hpp"

namespace semisplit {

// Games whose nodal states have one representation across all encodings set
// `static constexpr bool kSharedNodalStates = true`; their states are compared
// directly instead of through dumps.
template <typename G>
constexpr bool shares_nodal_states() {
  if constexpr (requires { G::kSharedNodalStates; }) {
    return G::kSharedNodalStates;
  } else {
    return false;
  }
}

template <SemisplitGame A, SemisplitGame B>
bool same_position(const A& a, const typename A::State& sa, const B& b, const typename B::State& sb) {
  if constexpr (std::is_same_v<typename A::State, typename B::State> && shares_nodal_states<A>() &&
                shares_nodal_states<B>()) {
    return sa == sb;
  } else {
    return a.dump(sa) == b.dump(sb);
  }
}

struct EquivalenceReport {
  bool equivalent = true;
  std::uint64_t states_compared = 0;
  // First counterexample: the moves leading to it, what differs, and both dumps.
  std::vector<std::string> path;
  std::string difference;
  std::string dump_a;
  std::string dump_b;

  [[nodiscard]] std::string describe() const {
    if (equivalent) return "equivalent (" + std::to_string(states_compared) + " nodal states compared)";
    std::ostringstream os;
    os << "mismatch after [";
    for (std::size_t i = 0; i < path.size(); ++i) os << (i ? " " : "") << path[i];
    os << "]: " << difference << "\n--- a ---\n" << dump_a << "--- b ---\n" << dump_b;
    return os.str();
  }
};

namespace detail {

template <SemisplitGame G>
std::vector<std::pair<MoveKey, Submove>> keyed_moves(const G& game, const typename G::State& s) {
  std::vector<Submove> moves;
  enumerate_moves(game, s, moves);
  std::vector<std::pair<MoveKey, Submove>> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.emplace_back(game.move_key(s, m), m);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first || (x.first == y.first && x.second < y.second); });
  return out;
}

}  // namespace detail

// Co-traverses two encodings of the same rules from their initial states for
// `plies` full moves. Reached nodal states must agree on position, player to
// act, terminality and (at play ends) scores; states before the last ply must
// also agree on the multiset of move descriptors. Stops at the first mismatch.
template <SemisplitGame A, SemisplitGame B>
EquivalenceReport rolled_up_equivalence(const A& a, const B& b, int plies) {
  struct Pair {
    typename A::State sa;
    typename B::State sb;
    std::vector<MoveKey> path;
  };
  EquivalenceReport report;
  const auto fail = [&](const Pair& p, std::string what) {
    report.equivalent = false;
    for (MoveKey key : p.path) report.path.push_back(a.move_to_string(key));
    report.difference = std::move(what);
    report.dump_a = a.dump(p.sa);
    report.dump_b = b.dump(p.sb);
  };
  // Compares everything except the move sets; returns false on mismatch.
  const auto check_state = [&](const Pair& p, bool end_a, bool end_b) {
    ++report.states_compared;
    if (!same_position(a, p.sa, b, p.sb)) {
      fail(p, "positions differ");
      return false;
    }
    if (a.current_player(p.sa) != b.current_player(p.sb)) {
      fail(p, "players to act differ");
      return false;
    }
    if (a.is_terminal(p.sa) != b.is_terminal(p.sb)) {
      fail(p, "terminal flags differ");
      return false;
    }
    if (end_a != end_b) {
      fail(p, "one encoding has no legal move");
      return false;
    }
    if (end_a && a.scores(p.sa) != b.scores(p.sb)) {
      fail(p, "scores differ");
      return false;
    }
    return true;
  };

  std::vector<Pair> level{Pair{a.initial_state(), b.initial_state(), {}}};
  for (int depth = 0; depth < plies && !level.empty(); ++depth) {
    std::vector<Pair> next;
    const bool last = depth + 1 == plies;
    for (const Pair& p : level) {
      const auto ma = a.is_terminal(p.sa) ? decltype(detail::keyed_moves(a, p.sa)){} : detail::keyed_moves(a, p.sa);
      const auto mb = b.is_terminal(p.sb) ? decltype(detail::keyed_moves(b, p.sb)){} : detail::keyed_moves(b, p.sb);
      if (!check_state(p, ma.empty(), mb.empty())) return report;
      const bool keys_equal =
          ma.size() == mb.size() &&
          std::equal(ma.begin(), ma.end(), mb.begin(), [](const auto& x, const auto& y) { return x.first == y.first; });
      if (!keys_equal) {
        std::ostringstream os;
        os << "move sets differ (" << ma.size() << " vs " << mb.size() << " moves)";
        std::size_t i = 0;
        std::size_t j = 0;
        int shown = 0;
        while ((i < ma.size() || j < mb.size()) && shown < 5) {
          if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
            os << "; only in a: " << a.move_to_string(ma[i++].first);
            ++shown;
          } else if (i == ma.size() || mb[j].first < ma[i].first) {
            os << "; only in b: " << b.move_to_string(mb[j++].first);
            ++shown;
          } else {
            ++i;
            ++j;
          }
        }
        fail(p, os.str());
        return report;
      }
      for (std::size_t k = 0; k < ma.size(); ++k) {
        Pair child{p.sa, p.sb, p.path};
        apply_submove(a, child.sa, ma[k].second);
        apply_submove(b, child.sb, mb[k].second);
        child.path.push_back(ma[k].first);
        if (last) {
          // The final level is only checked, never expanded, so keep it out of memory.
          const bool end_a = a.is_terminal(child.sa);
          const bool end_b = b.is_terminal(child.sb);
          if (!check_state(child, end_a, end_b)) return report;
        } else {
          next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
  }
  if (plies == 0) {
    const Pair p{a.initial_state(), b.initial_state(), {}};
    check_state(p, a.is_terminal(p.sa), b.is_terminal(p.sb));
  }
  return report;
}

}  // namespace semisplit
