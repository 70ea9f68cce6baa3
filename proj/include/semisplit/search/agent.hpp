#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/errors.hpp"
#include "semisplit/core/rng.hpp"
#include "semisplit/heuristics/mast.hpp"
#include "semisplit/heuristics/rave.hpp"
#include "semisplit/search/budget.hpp"
#include "semisplit/search/config.hpp"

namespace semisplit {

using NodeId = std::int32_t;

struct TurnStats {
  std::uint64_t iterations = 0;
  std::uint64_t nodal_states = 0;
  std::uint64_t tree_nodes = 0;
  bool fallback = false;  // no iteration finished; the move was drawn at random
};

// Everything backpropagation saw in one iteration, for replaying the
// heuristic updates independently. `path` lists the inner nodes of the
// iteration path (root first, leaf excluded) with their children as they were
// when their AMAF statistics were updated.
struct IterationLog {
  struct PathNode {
    NodeId id = -1;
    PlayerId player = 0;
    std::size_t trace_offset = 0;
    Submove context;
    std::vector<std::pair<NodeId, Submove>> children;
  };
  Trace trace;
  Scores scores{};
  std::vector<PathNode> path;
};

// Index of the best (mean, iterations) pair: highest mean, then most
// iterations, then uniformly at random.
inline std::size_t final_choice(const std::vector<std::pair<double, std::uint64_t>>& stats, Rng& rng) {
  std::size_t chosen = 0;
  std::uint32_t ties = 1;
  for (std::size_t i = 1; i < stats.size(); ++i) {
    if (stats[i] > stats[chosen]) {
      chosen = i;
      ties = 1;
    } else if (stats[i] == stats[chosen] && rng.below(++ties) == 0) {
      chosen = i;
    }
  }
  return chosen;
}

template <SemisplitGame G>
class Agent {
 public:
  using State = typename G::State;

  struct Node {
    State state;
    NodeId parent = -1;
    Submove edge;     // from the parent
    Submove context;  // semimoves since the last nodal ancestor
    bool nodal = true;
    bool play_end = false;
    bool alive = true;  // false once rolled up
    PlayerId player = 0;  // decides at this node
    PlayerId mover = 0;   // decided at the parent; score_sum is theirs
    double score_sum = 0.0;  // normalized
    std::uint64_t iterations = 0;
    std::vector<NodeId> children;
    std::vector<Submove> untried;
    bool untried_ready = false;
    AmafStat amaf;          // split, join or context statistics per the variant
    AmafStat amaf_context;  // the context half of RAVE-mix
  };

  Agent(G game, AgentConfig config, std::uint64_t seed)
      : game_(std::move(game)), config_(config), rng_(seed), mast_(config.mast, config.mix_threshold) {
    config_.validate();
  }

  [[nodiscard]] const G& game() const { return game_; }
  [[nodiscard]] const AgentConfig& config() const { return config_; }
  [[nodiscard]] const MastTables& mast() const { return mast_; }
  [[nodiscard]] const TurnStats& last_turn() const { return stats_; }
  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
  [[nodiscard]] NodeId root() const { return root_; }
  [[nodiscard]] const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }

  void set_iteration_log(std::vector<IterationLog>* log) { log_ = log; }

  // Searches from a nodal, non-terminal state until the budget is spent and
  // returns the chosen move.
  Submove choose_move(const State& state, Budget& budget) {
    if (!(config_.tree_reuse && root_ >= 0 && node(root_).state == state)) reset_tree(state);
    budget.start();
    stats_ = {};
    while (!budget.should_stop()) {
      if (!iterate(budget)) break;
      budget.count_iteration();
      ++stats_.iterations;
    }
    stats_.nodal_states = budget.charged();
    stats_.tree_nodes = live_nodes();
    return final_move();
  }

  // Called after every move of the real play, by either player, with the
  // move in this agent's encoding.
  void observe_move(const State& before, const Submove& move) {
    if (mast_.enabled()) mast_.decay(config_.decay);
    if (!config_.tree_reuse) return;
    if (root_ < 0 || !(node(root_).state == before)) {
      clear_tree();
      return;
    }
    NodeId v = root_;
    std::size_t used = 0;
    while (used < move.size()) {
      NodeId next = -1;
      for (NodeId c : node(v).children) {
        const Submove& e = node(c).edge;
        if (e.size() <= move.size() - used && std::equal(e.begin(), e.end(), move.begin() + used)) {
          next = c;
          break;
        }
      }
      if (next < 0) {
        clear_tree();
        return;
      }
      used += node(next).edge.size();
      v = next;
    }
    keep_subtree(v);
  }

  void reset_tree(const State& state) {
    clear_tree();
    root_ = add_node(-1, Submove{}, state);
  }

  // One MCTS iteration; false when the budget ran out inside it.
  bool iterate(Budget& budget) {
    try {
      iterate_once(budget);
      return true;
    } catch (const BudgetExhausted&) {
      return false;
    }
  }

  // Greedy walk to the first nodal node: best mean, then most iterations,
  // then uniformly at random. Leaving the tree at an intermediate node, or
  // an empty tree, completes the move uniformly at random.
  Submove final_move() {
    Submove move;
    NodeId v = root_;
    do {
      const Node& n = node(v);
      if (n.children.empty()) {
        State s = n.state;
        SimCounters unused;
        if (!semisplit_random_move(game_, s, rng_, unused, move, buffers_)) {
          throw RuntimeFailure("final selection found no legal continuation in " + game_.name());
        }
        if (v == root_) stats_.fallback = true;
        return move;
      }
      v = best_final_child(v);
      move.append(node(v).edge);
    } while (!node(v).nodal);
    return move;
  }

 private:
  struct Probe {
    Budget& budget;
    void on_generated(std::size_t) {}
    void on_state(bool nodal) {
      if (nodal) budget.charge();
    }
  };

  Node& mut(NodeId id) { return nodes_[static_cast<std::size_t>(id)]; }

  std::uint64_t live_nodes() const {
    return static_cast<std::uint64_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.alive; }));
  }

  void clear_tree() {
    nodes_.clear();
    root_ = -1;
  }

  NodeId add_node(NodeId parent, const Submove& edge, const State& state) {
    Node n;
    n.state = state;
    n.parent = parent;
    n.edge = edge;
    n.nodal = game_.is_nodal(state);
    n.play_end = n.nodal && game_.is_terminal(state);
    n.player = game_.current_player(state);
    if (parent >= 0) {
      const Node& p = node(parent);
      n.mover = p.player;
      if (!n.nodal) n.context = concatenate(p.context, edge);
    }
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(n));
    if (parent >= 0) mut(parent).children.push_back(id);
    return id;
  }

  void keep_subtree(NodeId new_root) {
    std::vector<Node> kept;
    std::vector<NodeId> remap(nodes_.size(), -1);
    std::vector<NodeId> order{new_root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      remap[static_cast<std::size_t>(order[i])] = static_cast<NodeId>(i);
      for (NodeId c : node(order[i]).children) order.push_back(c);
    }
    for (NodeId old : order) {
      Node n = std::move(mut(old));
      n.parent = n.parent >= 0 && remap[static_cast<std::size_t>(n.parent)] >= 0
                     ? remap[static_cast<std::size_t>(n.parent)]
                     : -1;
      for (NodeId& c : n.children) c = remap[static_cast<std::size_t>(c)];
      kept.push_back(std::move(n));
    }
    kept.front().parent = -1;
    kept.front().edge.clear();
    nodes_ = std::move(kept);
    root_ = 0;
  }

  // Untried edges: full moves in an orthodox tree, single semimoves
  // otherwise, minus those already leading to a child.
  void prepare_untried(NodeId v) {
    Node& n = mut(v);
    if (n.untried_ready) return;
    n.untried_ready = true;
    if (n.play_end) return;
    if (config_.tree == TreeDesign::kOrthodox) {
      enumerate_moves(game_, n.state, n.untried);
    } else {
      std::vector<Semimove>& moves = buffers_.at(0);
      game_.legal_semimoves(n.state, moves);
      n.untried.clear();
      for (Semimove m : moves) n.untried.emplace_back(m);
    }
    if (n.children.empty()) return;
    std::erase_if(n.untried, [&](const Submove& u) {
      return std::any_of(n.children.begin(), n.children.end(), [&](NodeId c) {
        const Submove& e = node(c).edge;
        return e.size() >= u.size() && std::equal(u.begin(), u.end(), e.begin());
      });
    });
  }

  void iterate_once(Budget& budget) {
    NodeId v = root_;
    for (;;) {
      if (node(v).play_end) {
        backpropagate(v, game_.scores(node(v).state), Trace{});
        return;
      }
      prepare_untried(v);
      if (!node(v).untried.empty()) {
        if (expand(v, budget)) return;
        continue;  // the edge was dead and has been removed
      }
      if (node(v).children.empty()) {
        if (!node(v).nodal) throw RuntimeFailure("dead intermediate node in the search tree");
        mut(v).play_end = true;  // nodal without a legal move
        continue;
      }
      v = select_child(v);
    }
  }

  std::size_t pick_untried(NodeId v) {
    const Node& n = node(v);
    if (!config_.mast_expansion || n.untried.size() == 1) {
      return rng_.below(static_cast<std::uint32_t>(n.untried.size()));
    }
    const std::int32_t slot = context_slot(n.player, n.context);
    std::vector<double> values(n.untried.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = mast_.submove_value(n.player, slot, n.untried[i]);
    EpsilonGreedyPicker picker;
    picker.reset(values, rng_);
    return static_cast<std::size_t>(picker.next(rng_, config_.epsilon));
  }

  void remove_untried(NodeId v, std::size_t i) {
    auto& u = mut(v).untried;
    u[i] = u.back();
    u.pop_back();
  }

  bool expand(NodeId v, Budget& budget) {
    Probe probe{budget};
    const std::size_t pick = pick_untried(v);
    const Submove edge = node(v).untried[pick];
    State s = node(v).state;
    for (Semimove m : edge) {
      game_.apply(s, m);
      probe.on_state(game_.is_nodal(s));
    }
    Trace sim_trace;
    if (!uses_nodal_expansion(config_.tree)) {
      const Submove context = game_.is_nodal(s) ? Submove{} : concatenate(node(v).context, edge);
      const auto scores = simulate(s, context, probe, sim_trace);
      if (!scores) {
        remove_untried(v, pick);
        return false;
      }
      remove_untried(v, pick);
      const NodeId child = add_node(v, edge, s);
      backpropagate(child, *scores, sim_trace);
      return true;
    }
    // Nodal expansion: complete the move at random, then add one node per
    // semimove of it. The tree is touched only after the simulation, so a
    // budget abort leaves it unchanged.
    const State after_edge = s;
    Submove completion;
    if (!game_.is_nodal(s) && !semisplit_random_move(game_, s, rng_, probe, completion, buffers_)) {
      remove_untried(v, pick);
      return false;
    }
    const auto scores = simulate(s, Submove{}, probe, sim_trace);
    assert(scores.has_value());
    remove_untried(v, pick);
    NodeId leaf = add_node(v, edge, after_edge);
    State chain = after_edge;
    for (Semimove m : completion) {
      game_.apply(chain, m);
      leaf = add_node(leaf, Submove(m), chain);
    }
    backpropagate(leaf, *scores, sim_trace);
    return true;
  }

  std::int32_t context_slot(PlayerId player, const Submove& context) const {
    std::int32_t slot = ContextTrie::kRoot;
    for (Semimove m : context) {
      slot = mast_.advance(player, slot, m);
      if (slot < 0) return slot;
    }
    return slot;
  }

  // Plays from `state` to the end of the play with the configured policy.
  // Nullopt iff `state` is dead.
  std::optional<Scores> simulate(State state, const Submove& context, Probe& probe, Trace& trace) {
    std::int32_t slot = mast_.enabled() ? context_slot(game_.current_player(state), context) : ContextTrie::kRoot;
    Submove move;
    while (!(game_.is_nodal(state) && game_.is_terminal(state))) {
      const PlayerId player = game_.current_player(state);
      const bool was_nodal = game_.is_nodal(state);
      move.clear();
      if (!policy_move(state, move, player, slot, probe)) {
        if (was_nodal) return game_.scores(state);
        return std::nullopt;
      }
      append_trace<G>(move, player, trace);
      slot = ContextTrie::kRoot;
    }
    return game_.scores(state);
  }

  bool policy_move(State& state, Submove& out, PlayerId player, std::int32_t slot, Probe& probe) {
    if (config_.sim == SimDesign::kSemisplit) {
      if (!mast_.enabled()) return semisplit_random_move(game_, state, rng_, probe, out, buffers_);
      return mast_move_from(state, out, player, slot, probe, 0);
    }
    enumerate_moves(game_, state, moves_);
    if (moves_.empty()) return false;
    std::size_t pick = 0;
    if (mast_.enabled() && moves_.size() > 1) {
      values_.resize(moves_.size());
      for (std::size_t i = 0; i < moves_.size(); ++i) values_[i] = mast_.submove_value(player, slot, moves_[i]);
      pick = static_cast<std::size_t>(greedy_pick(values_));
    } else {
      pick = rng_.below(static_cast<std::uint32_t>(moves_.size()));
    }
    out = moves_[pick];
    for (Semimove m : out) {
      game_.apply(state, m);
      probe.on_state(game_.is_nodal(state));
    }
    return true;
  }

  // One-shot epsilon-greedy draw, without building a heap.
  std::size_t greedy_pick(const std::vector<double>& values) {
    if (rng_.uniform() < config_.epsilon) return rng_.below(static_cast<std::uint32_t>(values.size()));
    double best = -std::numeric_limits<double>::infinity();
    std::size_t chosen = 0;
    std::uint32_t ties = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > best) {
        best = values[i];
        chosen = i;
        ties = 1;
      } else if (values[i] == best && rng_.below(++ties) == 0) {
        chosen = i;
      }
    }
    return chosen;
  }

  // Backtracking move search where each level picks epsilon-greedily by MAST
  // value among its not yet failed semimoves.
  bool mast_move_from(State& state, Submove& out, PlayerId player, std::int32_t slot, Probe& probe,
                      std::size_t depth) {
    std::vector<Semimove>& moves = buffers_.at(depth);
    game_.legal_semimoves(state, moves);
    if (moves.empty()) return false;
    if (depth >= value_levels_.size()) {
      value_levels_.resize(depth + 1);
      pickers_.resize(depth + 1);
    }
    std::vector<double>& values = value_levels_[depth];
    values.resize(moves.size());
    for (std::size_t i = 0; i < moves.size(); ++i) values[i] = mast_.semimove_value(player, slot, moves[i]);
    EpsilonGreedyPicker& picker = pickers_[depth];
    picker.reset(values, rng_);
    for (std::int32_t i = picker.next(rng_, config_.epsilon); i >= 0; i = picker.next(rng_, config_.epsilon)) {
      const Semimove m = moves[static_cast<std::size_t>(i)];
      State child = state;
      game_.apply(child, m);
      const bool nodal = game_.is_nodal(child);
      probe.on_state(nodal);
      out.push_back(m);
      if (nodal || mast_move_from(child, out, player, mast_.advance(player, slot, m), probe, depth + 1)) {
        state = std::move(child);
        return true;
      }
      out.pop_back();
    }
    return false;
  }

  double selection_value(const Node& c, double parent_visits, double exploration) const {
    const double visits = static_cast<double>(c.iterations);
    const double mean = c.score_sum / visits;
    if (config_.rave == HeuristicVariant::kNone) return uct_value(mean, visits, parent_visits, exploration);
    const AmafStat& amaf = config_.rave == HeuristicVariant::kMix && c.amaf_context.count >= config_.mix_threshold
                               ? c.amaf_context
                               : c.amaf;
    return rave_blended_value(mean, visits, parent_visits, exploration, config_.rave_k, amaf.mean());
  }

  NodeId select_child(NodeId v) {
    const Node& n = node(v);
    const double parent_visits = static_cast<double>(n.iterations);
    const double exploration = config_.exploration_constant();
    double best = -std::numeric_limits<double>::infinity();
    NodeId chosen = -1;
    std::uint32_t ties = 0;
    for (NodeId c : n.children) {
      const double value = selection_value(node(c), parent_visits, exploration);
      if (value > best) {
        best = value;
        chosen = c;
        ties = 1;
      } else if (value == best && rng_.below(++ties) == 0) {
        chosen = c;
      }
    }
    return chosen;
  }

  NodeId best_final_child(NodeId v) {
    const auto& children = node(v).children;
    std::vector<std::pair<double, std::uint64_t>> stats;
    stats.reserve(children.size());
    for (NodeId c : children) stats.emplace_back(node(c).score_sum / static_cast<double>(node(c).iterations), node(c).iterations);
    return children[final_choice(stats, rng_)];
  }

  void backpropagate(NodeId leaf, const Scores& scores, const Trace& sim_trace) {
    path_.clear();
    for (NodeId v = leaf; v >= 0; v = node(v).parent) path_.push_back(v);
    std::reverse(path_.begin(), path_.end());

    // The iteration as one flat list of semimoves: tree edges, then the
    // simulation.
    trace_.clear();
    offsets_.assign(path_.size(), 0);
    for (std::size_t j = 1; j < path_.size(); ++j) {
      const Node& c = node(path_[j]);
      const PlayerId player = node(path_[j - 1]).player;
      for (std::size_t k = 0; k < c.edge.size(); ++k) {
        trace_.push_back(TraceStep{c.edge[k], player, k + 1 == c.edge.size() && c.nodal});
      }
      offsets_[j] = trace_.size();
    }
    trace_.insert(trace_.end(), sim_trace.begin(), sim_trace.end());

    mast_.update_trace(trace_, scores);

    const bool rave = config_.rave != HeuristicVariant::kNone;
    if (rave) start_records();
    IterationLog* entry = nullptr;
    if (log_ != nullptr) {
      log_->push_back(IterationLog{trace_, scores, {}});
      entry = &log_->back();
    }

    std::size_t recorded = trace_.size();
    for (std::size_t j = path_.size() - 1; j >= 1; --j) {
      const NodeId v = path_[j];
      const NodeId up = path_[j - 1];
      Node& n = mut(v);
      n.score_sum += scores[static_cast<std::size_t>(n.mover)] / kMaxScore;
      ++n.iterations;
      if (entry != nullptr) {
        IterationLog::PathNode pn{up, node(up).player, offsets_[j - 1], node(up).context, {}};
        for (NodeId c : node(up).children) pn.children.emplace_back(c, node(c).edge);
        entry->path.push_back(std::move(pn));
      }
      if (rave) {
        for (std::size_t i = offsets_[j - 1]; i < recorded; ++i) record(i);
        recorded = offsets_[j - 1];
        update_amaf(up, scores);
      }
      if (config_.tree == TreeDesign::kRollUpNodal) roll_up(v);
    }
    ++mut(path_.front()).iterations;
    if (entry != nullptr) std::reverse(entry->path.begin(), entry->path.end());
  }

  // Applied-semimove records of one iteration, per player, grown bottom-up.
  // Split records semimoves; join records full moves; context records every
  // prefix (from the last nodal state) of the moves, so an edge `a` below
  // context `c` matches when c+a was played.
  void start_records() {
    for (auto& s : split_record_) s.clear();
    for (auto& s : prefix_record_) s.clear();
    prefix_at_.resize(trace_.size());
    Submove current;
    for (std::size_t i = 0; i < trace_.size(); ++i) {
      current.push_back(trace_[i].move);
      prefix_at_[i] = current;
      if (trace_[i].ends_nodal) current.clear();
    }
  }

  void record(std::size_t i) {
    const auto p = static_cast<std::size_t>(trace_[i].player);
    switch (config_.rave) {
      case HeuristicVariant::kSplit:
        split_record_[p].insert(trace_[i].move);
        break;
      case HeuristicVariant::kJoin:
        if (trace_[i].ends_nodal) prefix_record_[p].insert(prefix_at_[i]);
        break;
      case HeuristicVariant::kContext:
        prefix_record_[p].insert(prefix_at_[i]);
        break;
      case HeuristicVariant::kMix:
        split_record_[p].insert(trace_[i].move);
        prefix_record_[p].insert(prefix_at_[i]);
        break;
      case HeuristicVariant::kNone:
        break;
    }
  }

  bool split_match(std::size_t p, const Submove& edge) const {
    return std::all_of(edge.begin(), edge.end(), [&](Semimove m) { return split_record_[p].count(m) > 0; });
  }

  void update_amaf(NodeId v, const Scores& scores) {
    const Node& n = node(v);
    const auto p = static_cast<std::size_t>(n.player);
    const double score = scores[p] / kMaxScore;
    for (NodeId c : n.children) {
      Node& child = mut(c);
      switch (config_.rave) {
        case HeuristicVariant::kSplit:
          if (split_match(p, child.edge)) child.amaf.add(score);
          break;
        case HeuristicVariant::kJoin:
          if (prefix_record_[p].count(child.edge) > 0) child.amaf.add(score);
          break;
        case HeuristicVariant::kContext:
          if (prefix_record_[p].count(concatenate(n.context, child.edge)) > 0) child.amaf.add(score);
          break;
        case HeuristicVariant::kMix:
          if (split_match(p, child.edge)) child.amaf.add(score);
          if (prefix_record_[p].count(concatenate(n.context, child.edge)) > 0) child.amaf_context.add(score);
          break;
        case HeuristicVariant::kNone:
          break;
      }
    }
  }

  // Replaces a fully expanded intermediate node by its children, each
  // reattached to the parent with the concatenated edge. Children keep their
  // statistics, AMAF included.
  void roll_up(NodeId v) {
    if (v == root_ || node(v).nodal || !node(v).alive) return;
    prepare_untried(v);
    const Node& n = node(v);
    if (!n.untried.empty() || n.children.empty() || n.iterations < n.children.size()) return;
    const NodeId parent = n.parent;
    const Submove edge = n.edge;
    std::vector<NodeId> grandchildren = n.children;
    for (NodeId c : grandchildren) {
      Node& child = mut(c);
      child.edge = concatenate(edge, child.edge);
      child.parent = parent;
    }
    auto& siblings = mut(parent).children;
    const auto at = std::find(siblings.begin(), siblings.end(), v);
    assert(at != siblings.end());
    const auto index = at - siblings.begin();
    siblings.erase(at);
    siblings.insert(siblings.begin() + index, grandchildren.begin(), grandchildren.end());
    Node& gone = mut(v);
    gone.alive = false;
    gone.children.clear();
    gone.parent = -1;
  }

  G game_;
  AgentConfig config_;
  Rng rng_;
  MastTables mast_;
  std::vector<Node> nodes_;
  NodeId root_ = -1;
  TurnStats stats_;
  std::vector<IterationLog>* log_ = nullptr;

  SemimoveBuffers buffers_;
  std::deque<std::vector<double>> value_levels_;
  std::deque<EpsilonGreedyPicker> pickers_;
  std::vector<Submove> moves_;
  std::vector<double> values_;
  std::vector<NodeId> path_;
  std::vector<std::size_t> offsets_;
  Trace trace_;
  std::vector<Submove> prefix_at_;
  std::array<std::unordered_set<Semimove>, kMaxPlayers> split_record_;
  std::array<std::unordered_set<Submove>, kMaxPlayers> prefix_record_;
};

}  // namespace semisplit
