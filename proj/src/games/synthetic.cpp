#include "semisplit/games/synthetic.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "semisplit/core/errors.hpp"

namespace semisplit {

namespace {

using json = nlohmann::json;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

SyntheticNode node(std::string name, std::string label, bool nodal, PlayerId player,
                   std::vector<std::string> children = {}, std::optional<Scores> scores = std::nullopt) {
  return SyntheticNode{std::move(name), std::move(label), nodal, player, std::move(children), scores};
}

SyntheticNode leaf(std::string name, std::string label, PlayerId player, double first) {
  return node(std::move(name), std::move(label), true, player, {}, Scores{first, kMaxScore - first});
}

SyntheticNode inner(std::string name, std::string label, std::vector<std::string> children = {}) {
  return node(std::move(name), std::move(label), false, 0, std::move(children));
}

// A white move in a chess-like position: a promoting pawn, a king whose move
// is confirmed by a final check test, a knight reached through a direction
// choice, and pieces with no legal continuation. Nine alive intermediate
// states, five dead ones, eight moves.
SyntheticTreeSpec fig1() {
  SyntheticTreeSpec s;
  s.root = "root";
  s.nodes = {
      node("root", "root", true, 0, {"a7", "h3", "f1", "c2"}),
      inner("a7", "a7", {"a7a8"}),
      inner("a7a8", "a8", {"a7a8Q", "a7a8R", "a7a8B", "a7a8N"}),
      leaf("a7a8Q", "Q", 1, 100),
      leaf("a7a8R", "R", 1, 100),
      leaf("a7a8B", "B", 1, 0),
      leaf("a7a8N", "N", 1, 50),
      inner("h3", "h3", {"h3g2", "h3h2", "h3h4", "h3g3"}),
      inner("h3g2", "g2", {"h3g2+"}),
      leaf("h3g2+", "+", 1, 0),
      inner("h3h2", "h2", {"h3h2+"}),
      leaf("h3h2+", "+", 1, 0),
      inner("h3h4", "h4", {"h3h4+"}),
      leaf("h3h4+", "+", 1, 100),
      inner("h3g3", "g3"),
      inner("f1", "f1", {"f1up", "f1left"}),
      inner("f1up", "up", {"f1e3", "f1g3"}),
      inner("f1e3", "e3", {"f1e3+"}),
      leaf("f1e3+", "+", 1, 50),
      inner("f1g3", "g3"),
      inner("f1left", "left", {"f1d2"}),
      inner("f1d2", "d2"),
      inner("c2", "c2"),
  };
  return s;
}

SyntheticTreeSpec fig1_orthodox() {
  SyntheticTreeSpec s;
  s.root = "root";
  s.nodes = {
      node("root", "root", true, 0,
           {"a7a8Q", "a7a8R", "a7a8B", "a7a8N", "h3g2+", "h3h2+", "h3h4+", "f1e3+"}),
      leaf("a7a8Q", "a7.a8.Q", 1, 100),
      leaf("a7a8R", "a7.a8.R", 1, 100),
      leaf("a7a8B", "a7.a8.B", 1, 0),
      leaf("a7a8N", "a7.a8.N", 1, 50),
      leaf("h3g2+", "h3.g2.+", 1, 0),
      leaf("h3h2+", "h3.h2.+", 1, 0),
      leaf("h3h4+", "h3.h4.+", 1, 100),
      leaf("f1e3+", "f1.up.e3.+", 1, 50),
  };
  return s;
}

SyntheticTreeSpec dead_branch() {
  SyntheticTreeSpec s;
  s.root = "root";
  s.nodes = {
      node("root", "root", true, 0, {"L", "R"}),
      inner("L", "L", {"dead", "L2"}),
      inner("dead", "a"),
      inner("L2", "b", {"L2a"}),
      inner("L2a", "c"),
      inner("R", "R", {"R1"}),
      leaf("R1", "x", 1, 100),
  };
  return s;
}

SyntheticTreeSpec dead_root() {
  SyntheticTreeSpec s;
  s.root = "root";
  s.nodes = {
      node("root", "root", true, 0, {"x", "z"}),
      inner("x", "x", {"y"}),
      inner("y", "y"),
      inner("z", "z"),
  };
  return s;
}

SyntheticTreeSpec chain() {
  SyntheticTreeSpec s;
  s.root = "root";
  s.nodes = {
      node("root", "root", true, 0, {"c1"}),
      inner("c1", "c1", {"c2"}),
      inner("c2", "c2", {"c3"}),
      inner("c3", "c3", {"end"}),
      leaf("end", "end", 1, 100),
  };
  return s;
}

// Two full moves with branching intermediate layers and a few dead ends;
// leaf scores follow a fixed pattern so that some moves are better than others.
SyntheticTreeSpec two_ply() {
  SyntheticTreeSpec s;
  s.root = "root";
  SyntheticNode root = node("root", "root", true, 0);
  int leaf_index = 0;
  for (const char* first : {"a", "b", "c"}) {
    const std::string f = first;
    SyntheticNode branch = inner(f, f);
    for (const char* second : {"1", "2", "3"}) {
      const std::string name = f + second;
      branch.children.push_back(name);
      if (f == "c" && std::string(second) == "3") {
        s.nodes.push_back(inner(name, second));
        continue;
      }
      SyntheticNode reply = node(name, second, true, 1);
      for (const char* third : {"u", "v"}) {
        const std::string tname = name + third;
        reply.children.push_back(tname);
        SyntheticNode split = inner(tname, third);
        for (const char* fourth : {"x", "y", "z"}) {
          const std::string lname = tname + fourth;
          split.children.push_back(lname);
          ++leaf_index;
          if (leaf_index % 7 == 3) {
            s.nodes.push_back(inner(lname, fourth));
          } else {
            const double first_score = (leaf_index * 37 % 5 == 0) ? 50.0 : (leaf_index * 13 % 3 == 0 ? 0.0 : 100.0);
            s.nodes.push_back(leaf(lname, fourth, 0, first_score));
          }
        }
        s.nodes.push_back(std::move(split));
      }
      s.nodes.push_back(std::move(reply));
    }
    root.children.push_back(f);
    s.nodes.push_back(std::move(branch));
  }
  s.nodes.insert(s.nodes.begin(), std::move(root));
  return s;
}

// Index of every node by name, with the validation that makes it a tree.
struct Indexed {
  std::unordered_map<std::string, std::int32_t> by_name;
  std::vector<std::int32_t> parent;
  std::int32_t root = -1;
};

Indexed index_and_validate(const SyntheticTreeSpec& spec) {
  std::vector<std::string> problems;
  Indexed ix;
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const auto& n = spec.nodes[i];
    if (n.name.empty()) problems.push_back("node #" + std::to_string(i) + " has no name");
    if (!ix.by_name.emplace(n.name, static_cast<std::int32_t>(i)).second) {
      problems.push_back("duplicate node name '" + n.name + "'");
    }
  }
  ix.parent.assign(spec.nodes.size(), -1);
  const auto root_it = ix.by_name.find(spec.root);
  if (root_it == ix.by_name.end()) {
    problems.push_back("root '" + spec.root + "' is not a node");
  } else {
    ix.root = root_it->second;
    if (!spec.nodes[ix.root].nodal) problems.push_back("root must be nodal");
  }
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const auto& n = spec.nodes[i];
    std::map<std::string, int> labels;
    for (const auto& child : n.children) {
      const auto it = ix.by_name.find(child);
      if (it == ix.by_name.end()) {
        problems.push_back("'" + n.name + "' lists unknown child '" + child + "'");
        continue;
      }
      if (ix.parent[it->second] >= 0) {
        problems.push_back("'" + child + "' has more than one parent");
      }
      ix.parent[it->second] = static_cast<std::int32_t>(i);
      const auto& cn = spec.nodes[it->second];
      if (++labels[cn.label.empty() ? cn.name : cn.label] == 2) {
        problems.push_back("'" + n.name + "' has two children labelled '" + (cn.label.empty() ? cn.name : cn.label) + "'");
      }
    }
    if (n.scores && (!n.nodal || !n.children.empty())) {
      problems.push_back("'" + n.name + "' has scores but is not a nodal leaf");
    }
    if (n.scores) {
      for (double v : *n.scores) {
        if (v < 0 || v > kMaxScore) problems.push_back("'" + n.name + "' has a score outside [0, 100]");
      }
    }
    if (n.nodal && (n.player < 0 || n.player > 1)) problems.push_back("'" + n.name + "' has player outside {0, 1}");
  }
  if (ix.root >= 0) {
    if (ix.parent[ix.root] >= 0) problems.push_back("root has a parent");
    // Reachability from the root, bounding intermediate chains by the submove capacity.
    std::vector<char> seen(spec.nodes.size(), 0);
    std::function<void(std::int32_t, int)> walk = [&](std::int32_t v, int depth) {
      if (seen[v]) return;
      seen[v] = 1;
      if (depth >= static_cast<int>(Submove::kMaxLength)) {
        problems.push_back("move through '" + spec.nodes[v].name + "' is longer than " +
                           std::to_string(Submove::kMaxLength) + " semimoves");
        return;
      }
      for (const auto& child : spec.nodes[v].children) {
        const auto it = ix.by_name.find(child);
        if (it == ix.by_name.end()) continue;
        walk(it->second, spec.nodes[it->second].nodal ? 0 : depth + 1);
      }
    };
    if (problems.empty()) {
      walk(ix.root, 0);
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) problems.push_back("'" + spec.nodes[i].name + "' is not reachable from the root");
      }
    }
  }
  if (!problems.empty()) {
    std::string message = "invalid synthetic tree:";
    for (const auto& p : problems) message += "\n  - " + p;
    throw ConfigError(message);
  }
  return ix;
}

}  // namespace

SyntheticTreeSpec builtin_synthetic(const std::string& name) {
  if (name == "fig1") return fig1();
  if (name == "fig1-orthodox") return fig1_orthodox();
  if (name == "dead-branch") return dead_branch();
  if (name == "dead-root") return dead_root();
  if (name == "chain") return chain();
  if (name == "two-ply") return two_ply();
  std::string message = "unknown synthetic tree '" + name + "'; built-ins:";
  for (const auto& n : builtin_synthetic_names()) message += " " + n;
  throw ConfigError(message);
}

std::vector<std::string> builtin_synthetic_names() {
  return {"fig1", "fig1-orthodox", "dead-branch", "dead-root", "chain", "two-ply"};
}

SyntheticTreeSpec parse_synthetic(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("synthetic tree: ") + e.what(), e.byte);
  }
  SyntheticTreeSpec spec;
  try {
    const auto& nodes = doc.at("nodes");
    for (const auto& n : nodes) {
      SyntheticNode out;
      out.name = n.at("name").get<std::string>();
      out.label = n.value("label", out.name);
      out.nodal = n.value("nodal", false);
      out.player = n.value("player", 0);
      out.children = n.value("children", std::vector<std::string>{});
      if (n.contains("scores")) {
        const auto v = n.at("scores").get<std::vector<double>>();
        if (v.size() != 2) throw ConfigError("'" + out.name + "' must have exactly two scores");
        out.scores = Scores{v[0], v[1]};
      }
      spec.nodes.push_back(std::move(out));
    }
    spec.root = doc.value("root", spec.nodes.empty() ? std::string() : spec.nodes.front().name);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("synthetic tree: ") + e.what());
  }
  index_and_validate(spec);
  return spec;
}

std::string to_json(const SyntheticTreeSpec& spec) {
  json doc;
  doc["root"] = spec.root;
  doc["nodes"] = json::array();
  for (const auto& n : spec.nodes) {
    json j{{"name", n.name}, {"label", n.label.empty() ? n.name : n.label}, {"nodal", n.nodal}};
    if (n.nodal) j["player"] = n.player;
    if (!n.children.empty()) j["children"] = n.children;
    if (n.scores) j["scores"] = {(*n.scores)[0], (*n.scores)[1]};
    doc["nodes"].push_back(std::move(j));
  }
  return doc.dump(1);
}

SyntheticTreeSpec rolled_up(const SyntheticTreeSpec& spec) {
  const Indexed ix = index_and_validate(spec);
  const auto label = [&](std::int32_t v) {
    return spec.nodes[v].label.empty() ? spec.nodes[v].name : spec.nodes[v].label;
  };
  SyntheticTreeSpec out;
  out.root = spec.root;
  std::unordered_map<std::string, std::string> new_label;
  std::vector<std::int32_t> queue{ix.root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::int32_t v = queue[qi];
    SyntheticNode n = spec.nodes[v];
    n.label = v == ix.root ? label(v) : new_label.at(n.name);
    n.children.clear();
    std::function<void(std::int32_t, const std::string&)> descend = [&](std::int32_t u, const std::string& path) {
      for (const auto& child_name : spec.nodes[u].children) {
        const std::int32_t c = ix.by_name.at(child_name);
        const std::string p = path.empty() ? label(c) : path + "." + label(c);
        if (spec.nodes[c].nodal) {
          n.children.push_back(child_name);
          new_label[child_name] = p;
          queue.push_back(c);
        } else {
          descend(c, p);
        }
      }
    };
    descend(v, "");
    out.nodes.push_back(std::move(n));
  }
  return out;
}

SyntheticGame::SyntheticGame(SyntheticTreeSpec spec, Strategy strategy)
    : spec_(std::move(spec)), strategy_(strategy) {
  const Indexed ix = index_and_validate(spec_);
  root_ = ix.root;
  std::unordered_map<std::string, std::uint32_t> label_ids;
  nodes_.resize(spec_.nodes.size());
  for (std::size_t i = 0; i < spec_.nodes.size(); ++i) {
    const auto& n = spec_.nodes[i];
    nodes_[i] = Node{n.name, n.nodal, n.player, {}, n.scores};
    for (const auto& child : n.children) {
      const std::int32_t c = ix.by_name.at(child);
      const auto& cn = spec_.nodes[c];
      const std::string& l = cn.label.empty() ? cn.name : cn.label;
      const auto [it, added] = label_ids.emplace(l, static_cast<std::uint32_t>(labels_.size()));
      if (added) labels_.push_back(l);
      nodes_[i].children.emplace_back(it->second, c);
      if (!cn.nodal) single_ = false;
    }
  }
  // Intermediate nodes act for their nearest nodal ancestor.
  std::function<void(std::int32_t)> inherit = [&](std::int32_t v) {
    for (const auto& [l, c] : nodes_[v].children) {
      if (!nodes_[c].nodal) nodes_[c].player = nodes_[v].player;
      inherit(c);
    }
  };
  inherit(root_);
}

void SyntheticGame::legal_semimoves(const State& s, std::vector<Semimove>& out) const {
  out.clear();
  for (const auto& [l, c] : nodes_[s.node].children) out.push_back(make_semimove(1, l));
}

void SyntheticGame::apply(State& s, Semimove m) const {
  const std::uint32_t l = semimove_payload(m);
  for (const auto& [label, c] : nodes_[s.node].children) {
    if (label == l) {
      s.node = c;
      return;
    }
  }
  assert(false);
}

Scores SyntheticGame::scores(const State& s) const {
  const Node& n = nodes_[s.node];
  if (n.scores) return *n.scores;
  Scores out{};
  out[1 - n.player] = kMaxScore;
  return out;
}

MoveKey SyntheticGame::move_key(const State& from, const Submove& move) const {
  State s = from;
  for (Semimove m : move) apply(s, m);
  return fnv1a(nodes_[s.node].name);
}

std::string SyntheticGame::move_to_string(MoveKey key) const {
  for (const auto& n : nodes_) {
    if (fnv1a(n.name) == key) return n.name;
  }
  return "?";
}

std::optional<SyntheticState> SyntheticGame::find(const std::string& node_name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].name == node_name) return State{static_cast<std::int32_t>(i)};
  }
  return std::nullopt;
}

}  // namespace semisplit
