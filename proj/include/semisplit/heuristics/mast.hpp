#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "semisplit/core/algorithms.hpp"
#include "semisplit/core/semimove.hpp"
#include "semisplit/heuristics/variants.hpp"

namespace semisplit {

// Value an unseen (or fully decayed) entry evaluates to: the maximum score,
// so untried actions are explored first.
inline constexpr double kUntriedValue = 100.0;
inline constexpr int kDefaultMixThreshold = 7;

struct MastEntry {
  double weight = 0.0;
  double sum = 0.0;

  void add(double score) {
    weight += 1.0;
    sum += score;
  }
  [[nodiscard]] double value() const { return weight > 0.0 ? sum / weight : kUntriedValue; }
};

// Contexts as a trie: slot 0 is the empty context at a nodal state, and each
// (slot, semimove) pair names the context extended by that semimove. Entry i
// holds the statistics of the last semimove of context i played after the
// rest of it.
class ContextTrie {
 public:
  static constexpr std::int32_t kRoot = 0;
  static constexpr std::int32_t kUnknown = -1;

  ContextTrie() : entries_(1) {}

  [[nodiscard]] std::int32_t child(std::int32_t slot, Semimove m) const;
  std::int32_t child_or_insert(std::int32_t slot, Semimove m);
  // Slot of the context reached by walking `path` from `slot`, or kUnknown.
  [[nodiscard]] std::int32_t walk(std::int32_t slot, const Submove& path) const;

  [[nodiscard]] const MastEntry& entry(std::int32_t slot) const { return entries_[static_cast<std::size_t>(slot)]; }
  MastEntry& entry(std::int32_t slot) { return entries_[static_cast<std::size_t>(slot)]; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  void scale(double factor);

 private:
  static std::uint64_t key(std::int32_t slot, Semimove m) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(slot)) << 32) | m.code;
  }

  std::unordered_map<std::uint64_t, std::int32_t> index_;
  std::vector<MastEntry> entries_;
};

// Per-player move-average tables for one MAST variant. Scores are raw
// (0..100). The tables live for a whole play and are decayed between moves.
class MastTables {
 public:
  explicit MastTables(HeuristicVariant variant, int mix_threshold = kDefaultMixThreshold);

  [[nodiscard]] HeuristicVariant variant() const { return variant_; }
  [[nodiscard]] bool enabled() const { return variant_ != HeuristicVariant::kNone; }

  // Value of semimove `m` for `player` at an intermediate (or nodal) state
  // whose context is trie slot `slot`.
  [[nodiscard]] double semimove_value(PlayerId player, std::int32_t slot, Semimove m) const;
  // Value of a submove continuing the context at `slot`; for a full move from
  // a nodal state pass ContextTrie::kRoot. Split averages the semimove values
  // and is untried as soon as one semimove is.
  [[nodiscard]] double submove_value(PlayerId player, std::int32_t slot, const Submove& m) const;
  // Context slot after playing `m` at `slot`; kUnknown when never seen.
  [[nodiscard]] std::int32_t advance(PlayerId player, std::int32_t slot, Semimove m) const;

  // One application of a full move.
  void update_move(PlayerId player, const Submove& move, double score);
  // Every move of an iteration, each counted as often as it was applied.
  void update_trace(const Trace& trace, const Scores& scores);
  // Multiplies every weight and sum; factor 0 resets everything to untried.
  void decay(double factor);

  [[nodiscard]] MastEntry split_entry(PlayerId player, Semimove m) const;
  [[nodiscard]] MastEntry join_entry(PlayerId player, const Submove& move) const;
  // Statistics of the last semimove of `prefix` played after the rest of it.
  [[nodiscard]] MastEntry context_entry(PlayerId player, const Submove& prefix) const;

 private:
  [[nodiscard]] double split_value(PlayerId player, const Submove& m) const;
  [[nodiscard]] bool uses_split() const {
    return variant_ == HeuristicVariant::kSplit || variant_ == HeuristicVariant::kMix;
  }
  [[nodiscard]] bool uses_context() const {
    return variant_ == HeuristicVariant::kContext || variant_ == HeuristicVariant::kMix;
  }

  HeuristicVariant variant_;
  int mix_threshold_;
  std::array<std::unordered_map<Semimove, MastEntry>, kMaxPlayers> split_;
  std::array<std::unordered_map<Submove, MastEntry>, kMaxPlayers> join_;
  std::array<ContextTrie, kMaxPlayers> context_;
};

// Epsilon-greedy choice with removal, for backtracking searches: each call
// picks among the candidates not yet returned. With probability 1 - epsilon
// it takes a highest-valued one (ties broken uniformly), otherwise a uniform
// one. A max-heap with lazy deletion keeps repeated draws cheap.
class EpsilonGreedyPicker {
 public:
  void reset(const std::vector<double>& values, Rng& rng);
  // Index into the `values` given to reset(), or -1 when none remain.
  std::int32_t next(Rng& rng, double epsilon);
  [[nodiscard]] std::size_t remaining() const { return pool_.size(); }

 private:
  struct Item {
    double value;
    std::uint64_t tie;
    std::uint32_t index;
    bool operator<(const Item& o) const { return value != o.value ? value < o.value : tie < o.tie; }
  };
  void remove(std::uint32_t index);

  std::vector<Item> heap_;
  std::vector<std::uint32_t> pool_;
  std::vector<std::int32_t> position_;  // index -> place in pool_, -1 once taken
};

}  // namespace semisplit
