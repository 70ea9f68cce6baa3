#include "semisplit/heuristics/mast.hpp"

#include <algorithm>

namespace semisplit {

std::int32_t ContextTrie::child(std::int32_t slot, Semimove m) const {
  if (slot < 0) return kUnknown;
  const auto it = index_.find(key(slot, m));
  return it == index_.end() ? kUnknown : it->second;
}

std::int32_t ContextTrie::child_or_insert(std::int32_t slot, Semimove m) {
  const auto [it, inserted] = index_.try_emplace(key(slot, m), static_cast<std::int32_t>(entries_.size()));
  if (inserted) entries_.emplace_back();
  return it->second;
}

std::int32_t ContextTrie::walk(std::int32_t slot, const Submove& path) const {
  for (Semimove m : path) {
    slot = child(slot, m);
    if (slot < 0) return kUnknown;
  }
  return slot;
}

void ContextTrie::scale(double factor) {
  for (auto& e : entries_) {
    e.weight *= factor;
    e.sum *= factor;
  }
}

MastTables::MastTables(HeuristicVariant variant, int mix_threshold)
    : variant_(variant), mix_threshold_(mix_threshold) {}

double MastTables::split_value(PlayerId player, const Submove& m) const {
  double total = 0.0;
  for (Semimove a : m) {
    const auto& table = split_[static_cast<std::size_t>(player)];
    const auto it = table.find(a);
    if (it == table.end() || it->second.weight <= 0.0) return kUntriedValue;
    total += it->second.value();
  }
  return m.empty() ? kUntriedValue : total / static_cast<double>(m.size());
}

double MastTables::semimove_value(PlayerId player, std::int32_t slot, Semimove m) const {
  return submove_value(player, slot, Submove(m));
}

double MastTables::submove_value(PlayerId player, std::int32_t slot, const Submove& m) const {
  const auto p = static_cast<std::size_t>(player);
  switch (variant_) {
    case HeuristicVariant::kNone:
      return kUntriedValue;
    case HeuristicVariant::kSplit:
      return split_value(player, m);
    case HeuristicVariant::kJoin: {
      const auto it = join_[p].find(m);
      return it == join_[p].end() ? kUntriedValue : it->second.value();
    }
    case HeuristicVariant::kContext: {
      const std::int32_t at = context_[p].walk(slot, m);
      return at < 0 ? kUntriedValue : context_[p].entry(at).value();
    }
    case HeuristicVariant::kMix: {
      const std::int32_t at = context_[p].walk(slot, m);
      if (at >= 0 && context_[p].entry(at).weight >= mix_threshold_) return context_[p].entry(at).value();
      return split_value(player, m);
    }
  }
  return kUntriedValue;
}

std::int32_t MastTables::advance(PlayerId player, std::int32_t slot, Semimove m) const {
  if (!uses_context()) return ContextTrie::kRoot;
  return context_[static_cast<std::size_t>(player)].child(slot, m);
}

void MastTables::update_move(PlayerId player, const Submove& move, double score) {
  const auto p = static_cast<std::size_t>(player);
  if (uses_split()) {
    for (Semimove a : move) split_[p][a].add(score);
  }
  if (variant_ == HeuristicVariant::kJoin) join_[p][move].add(score);
  if (uses_context()) {
    // One update for every prefix of the move, in its own context.
    std::int32_t slot = ContextTrie::kRoot;
    for (Semimove a : move) {
      slot = context_[p].child_or_insert(slot, a);
      context_[p].entry(slot).add(score);
    }
  }
}

void MastTables::update_trace(const Trace& trace, const Scores& scores) {
  if (!enabled()) return;
  Submove move;
  PlayerId player = 0;
  for (const TraceStep& step : trace) {
    if (move.empty()) player = step.player;
    move.push_back(step.move);
    if (step.ends_nodal) {
      update_move(player, move, scores[static_cast<std::size_t>(player)]);
      move.clear();
    }
  }
  if (!move.empty()) update_move(player, move, scores[static_cast<std::size_t>(player)]);
}

void MastTables::decay(double factor) {
  for (std::size_t p = 0; p < kMaxPlayers; ++p) {
    for (auto& [_, e] : split_[p]) {
      e.weight *= factor;
      e.sum *= factor;
    }
    for (auto& [_, e] : join_[p]) {
      e.weight *= factor;
      e.sum *= factor;
    }
    context_[p].scale(factor);
  }
}

MastEntry MastTables::split_entry(PlayerId player, Semimove m) const {
  const auto& table = split_[static_cast<std::size_t>(player)];
  const auto it = table.find(m);
  return it == table.end() ? MastEntry{} : it->second;
}

MastEntry MastTables::join_entry(PlayerId player, const Submove& move) const {
  const auto& table = join_[static_cast<std::size_t>(player)];
  const auto it = table.find(move);
  return it == table.end() ? MastEntry{} : it->second;
}

MastEntry MastTables::context_entry(PlayerId player, const Submove& prefix) const {
  const auto& trie = context_[static_cast<std::size_t>(player)];
  const std::int32_t at = trie.walk(ContextTrie::kRoot, prefix);
  return at <= 0 ? MastEntry{} : trie.entry(at);
}

void EpsilonGreedyPicker::reset(const std::vector<double>& values, Rng& rng) {
  heap_.clear();
  pool_.clear();
  position_.assign(values.size(), -1);
  for (std::uint32_t i = 0; i < values.size(); ++i) {
    heap_.push_back(Item{values[i], rng.next(), i});
    position_[i] = static_cast<std::int32_t>(pool_.size());
    pool_.push_back(i);
  }
  std::make_heap(heap_.begin(), heap_.end());
}

void EpsilonGreedyPicker::remove(std::uint32_t index) {
  const auto at = static_cast<std::size_t>(position_[index]);
  const std::uint32_t last = pool_.back();
  pool_[at] = last;
  position_[last] = static_cast<std::int32_t>(at);
  pool_.pop_back();
  position_[index] = -1;
}

std::int32_t EpsilonGreedyPicker::next(Rng& rng, double epsilon) {
  if (pool_.empty()) return -1;
  std::uint32_t chosen = 0;
  if (rng.uniform() >= epsilon) {
    while (position_[heap_.front().index] < 0) {
      std::pop_heap(heap_.begin(), heap_.end());
      heap_.pop_back();
    }
    chosen = heap_.front().index;
    std::pop_heap(heap_.begin(), heap_.end());
    heap_.pop_back();
  } else {
    chosen = pool_[rng.below(static_cast<std::uint32_t>(pool_.size()))];
  }
  remove(chosen);
  return static_cast<std::int32_t>(chosen);
}

}  // namespace semisplit
