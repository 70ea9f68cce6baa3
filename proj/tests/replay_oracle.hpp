#pragma once

// Reference reconstruction of MAST-split and AMAF tables from iteration logs,
// written straight from the update rules rather than from the engine's
// incremental bookkeeping: every traced semimove updates its player's MAST
// entry once; a child of a path node gets one AMAF update when its edge was
// played by the node's player anywhere at or below the node.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semisplit/search/agent.hpp"

namespace replay {

struct Stat {
  double count = 0.0;
  double sum = 0.0;
};

struct Tables {
  std::map<std::pair<int, std::uint32_t>, Stat> mast;  // (player, semimove)
  std::map<semisplit::NodeId, Stat> amaf;
};

inline Tables rebuild(const std::vector<semisplit::IterationLog>& log) {
  Tables t;
  for (const auto& it : log) {
    for (const auto& step : it.trace) {
      Stat& s = t.mast[{step.player, step.move.code}];
      s.count += 1.0;
      s.sum += it.scores[static_cast<std::size_t>(step.player)];
    }
    for (const auto& pn : it.path) {
      std::set<std::uint32_t> played;
      for (std::size_t i = pn.trace_offset; i < it.trace.size(); ++i) {
        if (it.trace[i].player == pn.player) played.insert(it.trace[i].move.code);
      }
      for (const auto& [child, edge] : pn.children) {
        bool all = true;
        for (semisplit::Semimove m : edge) all = all && played.count(m.code) > 0;
        if (!all) continue;
        Stat& s = t.amaf[child];
        s.count += 1.0;
        s.sum += it.scores[static_cast<std::size_t>(pn.player)] / 100.0;
      }
    }
  }
  return t;
}

// Empty string when the agent's tables equal the reconstruction: counts
// exactly, sums within 1e-9.
template <typename G>
std::string compare(const semisplit::Agent<G>& agent, const Tables& t) {
  std::size_t compared = 0;
  for (const auto& [key, s] : t.mast) {
    const auto e = agent.mast().split_entry(key.first, semisplit::Semimove{key.second});
    if (e.weight != s.count || std::abs(e.sum - s.sum) > 1e-9) {
      return "MAST entry (" + std::to_string(key.first) + ", " + std::to_string(key.second) + ") differs";
    }
    ++compared;
  }
  for (semisplit::NodeId id = 0; id < static_cast<semisplit::NodeId>(agent.nodes().size()); ++id) {
    const auto& n = agent.node(id);
    const auto found = t.amaf.find(id);
    const Stat s = found == t.amaf.end() ? Stat{} : found->second;
    if (n.amaf.count != s.count || std::abs(n.amaf.sum - s.sum) > 1e-9) {
      return "AMAF of node " + std::to_string(id) + " differs: " + std::to_string(n.amaf.count) + " vs " +
             std::to_string(s.count);
    }
    ++compared;
  }
  if (compared == 0) return "nothing compared";
  return {};
}

}  // namespace replay
