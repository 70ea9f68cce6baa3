#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semisplit/core/game.hpp"
#include "semisplit/core/semimove.hpp"

namespace semisplit {

// A game given as an explicit tree. Each node is nodal or intermediate; the
// edge into a node carries its label, and sibling labels must differ. Nodal
// nodes name the player to act; intermediate nodes act for the player of their
// nearest nodal ancestor. Nodal leaves with scores are terminal; a nodal node
// without scores whose children are all dead, or that has none, ends the play
// with the player to act losing.
struct SyntheticNode {
  std::string name;
  std::string label;  // defaults to name
  bool nodal = false;
  PlayerId player = 0;
  std::vector<std::string> children;
  std::optional<Scores> scores;
};

struct SyntheticTreeSpec {
  std::string root;
  std::vector<SyntheticNode> nodes;
};

// Throws ParseError (JSON syntax) or ConfigError listing every violation.
SyntheticTreeSpec parse_synthetic(const std::string& json_text);
std::string to_json(const SyntheticTreeSpec& spec);

// Built-in trees: "fig1", "fig1-orthodox", "dead-branch", "dead-root", "chain",
// "two-ply".
SyntheticTreeSpec builtin_synthetic(const std::string& name);
std::vector<std::string> builtin_synthetic_names();

// The orthodox counterpart: nodal nodes only, with one edge per alive path
// between consecutive nodal nodes, labelled by the joined path labels.
SyntheticTreeSpec rolled_up(const SyntheticTreeSpec& spec);

struct SyntheticState {
  std::int32_t node = 0;
  friend bool operator==(const SyntheticState&, const SyntheticState&) = default;
};

class SyntheticGame {
 public:
  using State = SyntheticState;

  explicit SyntheticGame(SyntheticTreeSpec spec, Strategy strategy = Strategy::kMod);

  [[nodiscard]] State initial_state() const { return State{root_}; }
  void legal_semimoves(const State& s, std::vector<Semimove>& out) const;
  void apply(State& s, Semimove m) const;
  [[nodiscard]] bool is_nodal(const State& s) const { return nodes_[s.node].nodal; }
  [[nodiscard]] bool is_terminal(const State& s) const { return nodes_[s.node].scores.has_value(); }
  [[nodiscard]] Scores scores(const State& s) const;
  [[nodiscard]] PlayerId current_player(const State& s) const { return nodes_[s.node].player; }
  [[nodiscard]] int player_count() const { return 2; }
  [[nodiscard]] bool single_semimove_moves() const { return single_; }
  [[nodiscard]] MoveKey move_key(const State& from, const Submove& move) const;
  [[nodiscard]] std::string move_to_string(MoveKey key) const;
  [[nodiscard]] std::string dump(const State& s) const { return nodes_[s.node].name; }
  [[nodiscard]] std::string name() const { return "synthetic"; }
  [[nodiscard]] Strategy strategy() const { return strategy_; }

  [[nodiscard]] const SyntheticTreeSpec& spec() const { return spec_; }
  [[nodiscard]] std::optional<State> find(const std::string& node_name) const;
  [[nodiscard]] const std::string& label_of(Semimove m) const { return labels_[semimove_payload(m)]; }

 private:
  struct Node {
    std::string name;
    bool nodal;
    PlayerId player;
    std::vector<std::pair<std::uint32_t, std::int32_t>> children;  // (label id, node)
    std::optional<Scores> scores;
  };

  SyntheticTreeSpec spec_;
  Strategy strategy_;
  std::vector<Node> nodes_;
  std::vector<std::string> labels_;
  std::int32_t root_ = 0;
  bool single_ = true;
};

}  // namespace semisplit
