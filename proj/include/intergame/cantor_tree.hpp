#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "intergame/binary_word.hpp"
#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/serialize.hpp"
#include "intergame/strategy.hpp"

// Finite-depth dyadic strategy trees. One player (the pinned player) follows
// a fixed strategy; the other branches in two ways at every node. The node
// for a binary word w is the pinned player's move reached along w, so the
// tree is a Cantor scheme: nested along prefixes, disjoint across words of
// equal length.

namespace intergame {

enum class BrancherKind {
  split,          // two disjoint aligned adversary replies (splitting_responses)
  endpoint,       // Schmidt: adversary shares the left / right endpoint until the
                  // pinned move clears the node midpoint
  complementary,  // McMullen: Alice blocks Bob's first answer to force a second
};

inline std::string_view to_string(BrancherKind k) {
  switch (k) {
    case BrancherKind::split: return "split";
    case BrancherKind::endpoint: return "endpoint";
    case BrancherKind::complementary: return "complementary";
  }
  return "?";
}

inline BrancherKind parse_brancher(std::string_view s) {
  if (s == "split") return BrancherKind::split;
  if (s == "endpoint") return BrancherKind::endpoint;
  if (s == "complementary") return BrancherKind::complementary;
  throw Error(ErrorCode::parse_error, "unknown brancher '" + std::string(s) + "'");
}

struct TreeNode {
  Interval interval;
  std::vector<Move> fragment;  // moves leading from the parent node to this one
  std::size_t rounds = 0;      // adversary moves in the fragment

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct StrategyTree {
  GameVariant variant;
  Player pinned = Player::alice;
  BrancherKind brancher = BrancherKind::split;
  std::size_t depth = 0;
  std::map<BinaryWord, TreeNode> nodes;

  friend bool operator==(const StrategyTree&, const StrategyTree&) = default;
};

struct TreeOptions {
  std::size_t max_depth = 14;
  std::optional<Interval> opening;  // Bob's B_0 when Alice is pinned
  std::size_t max_segment_rounds = 10000;
};

struct LevelReport {
  std::size_t level = 0;
  std::size_t count = 0;
  Rational max_diameter;
  Rational total_length;
};

namespace detail {

struct Branch {
  std::vector<Move> fragment;
  GameState state;
  std::size_t rounds = 0;
};

class TreeBuilder {
 public:
  TreeBuilder(const GameVariant& v, const Strategy& pinned, BrancherKind kind, const TreeOptions& opts)
      : variant_(v), pinned_(pinned), kind_(kind), opts_(opts) {}

  StrategyTree build(std::size_t depth) {
    if (depth > opts_.max_depth) {
      throw Error(ErrorCode::depth_exceeded,
                  "depth " + std::to_string(depth) + " exceeds the maximum " + std::to_string(opts_.max_depth));
    }
    if (variant_.kind == GameKind::mcmullen && pinned_.owner != Player::bob) {
      throw Error(ErrorCode::precondition, "McMullen trees follow Bob's strategy");
    }
    if (kind_ == BrancherKind::endpoint && variant_.kind != GameKind::schmidt) {
      throw Error(ErrorCode::precondition, "the endpoint brancher needs Schmidt's game");
    }
    if (kind_ == BrancherKind::complementary && variant_.kind != GameKind::mcmullen) {
      throw Error(ErrorCode::precondition, "the complementary brancher needs McMullen's game");
    }
    if (pinned_.applicable && !pinned_.applicable(variant_)) {
      throw Error(ErrorCode::inapplicable_parameters, "strategy '" + pinned_.name + "' does not apply");
    }

    StrategyTree tree;
    tree.variant = variant_;
    tree.pinned = pinned_.owner;
    tree.brancher = kind_;
    tree.depth = depth;

    Branch root{{}, initial_state(variant_), 0};
    if (pinned_.owner == Player::alice) {
      push(root, Move{Player::bob, opts_.opening.value_or(default_opening())});
    } else if (opts_.opening) {
      push(root, Move{Player::bob, *opts_.opening});
    }
    if (root.state.to_move() == pinned_.owner) push(root, pinned_move(root.state));
    grow(tree, BinaryWord(), std::move(root), depth);
    return tree;
  }

 private:
  static void push(Branch& b, const Move& m) {
    b.state = apply(b.state, m);
    b.fragment.push_back(m);
  }

  Move pinned_move(const GameState& s) const {
    const Move m = pinned_.move(s);
    if (auto v = check_legal(s, m)) {
      throw Error(ErrorCode::strategy_illegal_move, "strategy '" + pinned_.name + "' played " + to_string(m.interval) +
                                                        " after " + std::to_string(s.history().size()) +
                                                        " moves: " + v->message());
    }
    return m;
  }

  Branch respond(const GameState& from, const Move& adversary) const {
    Branch b{{}, from, 1};
    push(b, adversary);
    push(b, pinned_move(b.state));
    return b;
  }

  std::pair<Branch, Branch> split(const GameState& s) const {
    const auto [m0, m1] = splitting_responses(s);
    return {respond(s, m0), respond(s, m1)};
  }

  Branch escape(const GameState& s, const Interval& node, Placement side) const {
    const Player adversary = other(pinned_.owner);
    const Strategy pin = endpoint_pin(adversary, side);
    const Rational x = node.center();
    Branch b{{}, s, 0};
    while (b.rounds < opts_.max_segment_rounds) {
      push(b, pin.move(b.state));
      push(b, pinned_move(b.state));
      ++b.rounds;
      const Interval& last = b.fragment.back().interval;
      if (side == Placement::left ? last.strictly_left_of(x) : last.strictly_right_of(x)) return b;
    }
    throw Error(ErrorCode::escape_not_found, "no escape from " + to_string(node) + " within " +
                                                 std::to_string(opts_.max_segment_rounds) + " rounds");
  }

  std::pair<Branch, Branch> complementary(const GameState& s, const Interval& node) const {
    const Rational len = variant_.beta * node.length();
    Branch first = respond(s, Move{Player::alice, place_subinterval(node, len, anchor::Right{})});
    const Interval& answer = first.fragment.back().interval;
    // Alice now plays where Bob answered (or half a length either side).
    const Rational half = answer.length() / 2;
    for (const Interval& obstacle : {answer, answer.shifted(half), answer.shifted(-half)}) {
      if (!node.contains(obstacle)) continue;
      Branch second = respond(s, Move{Player::alice, obstacle});
      if (second.fragment.back().interval.disjoint(answer)) return {std::move(first), std::move(second)};
    }
    throw Error(ErrorCode::branch_collision, "no blocking obstacle separates Bob's answers inside " + to_string(node));
  }

  void grow(StrategyTree& tree, const BinaryWord& word, Branch here, std::size_t remaining) {
    const Interval node = here.fragment.back().interval;
    tree.nodes[word] = TreeNode{node, std::move(here.fragment), here.rounds};
    if (remaining == 0) return;

    std::pair<Branch, Branch> kids = [&] {
      switch (kind_) {
        case BrancherKind::split: return split(here.state);
        case BrancherKind::endpoint:
          return std::pair{escape(here.state, node, Placement::left), escape(here.state, node, Placement::right)};
        case BrancherKind::complementary: return complementary(here.state, node);
      }
      throw Error(ErrorCode::precondition, "unknown brancher");
    }();
    const Interval& i0 = kids.first.fragment.back().interval;
    const Interval& i1 = kids.second.fragment.back().interval;
    if (!i0.disjoint(i1)) {
      throw Error(ErrorCode::branch_collision, "children of '" + word.str() + "' overlap: " + to_string(i0) + " and " +
                                                   to_string(i1));
    }
    grow(tree, word.child(0), std::move(kids.first), remaining - 1);
    grow(tree, word.child(1), std::move(kids.second), remaining - 1);
  }

  GameVariant variant_;
  const Strategy& pinned_;
  BrancherKind kind_;
  TreeOptions opts_;
};

}  // namespace detail

inline StrategyTree build_tree(const GameVariant& variant, const Strategy& pinned, BrancherKind brancher,
                               std::size_t depth, const TreeOptions& options = {}) {
  return detail::TreeBuilder(variant, pinned, brancher, options).build(depth);
}

/// Re-derives every structural invariant from the raw node data: complete
/// levels, legal fragments, nesting, strictly shrinking diameters and
/// pairwise disjointness within each level. Throws invariant-violation with
/// the offending words.
inline std::vector<LevelReport> verify_tree(const StrategyTree& tree) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::invariant_violation, what); };
  auto quoted = [](const BinaryWord& w) { return "'" + w.str() + "'"; };

  std::vector<std::vector<const std::pair<const BinaryWord, TreeNode>*>> levels(tree.depth + 1);
  for (const auto& entry : tree.nodes) {
    if (entry.first.size() > tree.depth) fail("word " + quoted(entry.first) + " is deeper than the tree");
    levels[entry.first.size()].push_back(&entry);
  }

  // Legality and nesting, walking from the root with the replayed position.
  std::map<BinaryWord, GameState> positions;
  for (std::size_t level = 0; level <= tree.depth; ++level) {
    const std::size_t expected = std::size_t{1} << level;
    if (levels[level].size() != expected) {
      fail("level " + std::to_string(level) + " has " + std::to_string(levels[level].size()) + " nodes, expected " +
           std::to_string(expected));
    }
    for (const auto* entry : levels[level]) {
      const BinaryWord& w = entry->first;
      const TreeNode& n = entry->second;
      GameState state = level == 0 ? initial_state(tree.variant) : positions.at(w.parent());
      if (n.fragment.empty()) fail("node " + quoted(w) + " has no moves");
      for (const auto& m : n.fragment) {
        if (auto v = check_legal(state, m)) fail("node " + quoted(w) + " replays an illegal move: " + v->message());
        state = apply(state, m);
      }
      if (n.fragment.back().player != tree.pinned || n.fragment.back().interval != n.interval) {
        fail("node " + quoted(w) + " does not end on the pinned player's move");
      }
      if (level > 0) {
        const TreeNode& parent = tree.nodes.at(w.parent());
        if (!parent.interval.contains(n.interval)) fail("node " + quoted(w) + " is not inside its parent");
        if (!(n.interval.length() < parent.interval.length())) {
          fail("node " + quoted(w) + " does not shrink below its parent");
        }
      }
      positions.emplace(w, std::move(state));
    }
    if (level > 0) {
      for (const auto* entry : levels[level - 1]) positions.erase(entry->first);
    }
  }

  std::vector<LevelReport> reports;
  for (std::size_t level = 0; level <= tree.depth; ++level) {
    auto row = levels[level];
    std::sort(row.begin(), row.end(), [](const auto* a, const auto* b) {
      if (a->second.interval.lo() != b->second.interval.lo()) return a->second.interval.lo() < b->second.interval.lo();
      return a->first < b->first;
    });
    LevelReport r;
    r.level = level;
    r.count = row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Interval& cur = row[i]->second.interval;
      if (i > 0 && !(row[i - 1]->second.interval.hi() < cur.lo())) {
        fail("nodes " + quoted(row[i - 1]->first) + " and " + quoted(row[i]->first) + " overlap");
      }
      r.max_diameter = i == 0 ? cur.length() : max(r.max_diameter, cur.length());
      r.total_length += cur.length();
    }
    if (!reports.empty() && !(r.max_diameter < reports.back().max_diameter)) {
      fail("maximum diameter does not decrease at level " + std::to_string(level));
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

/// Finite-depth bracket of every point coded by an extension of `word`.
inline const Interval& code_point(const StrategyTree& tree, const BinaryWord& word) {
  const auto it = word.size() <= tree.depth ? tree.nodes.find(word) : tree.nodes.end();
  if (it == tree.nodes.end()) throw Error(ErrorCode::unknown_word, "no node for word '" + word.str() + "'");
  return it->second.interval;
}

namespace io {

inline json to_json(const StrategyTree& tree, bool with_fragments = false) {
  json nodes = json::object();
  for (const auto& [word, node] : tree.nodes) {
    json n{{"lo", node.interval.lo().str()}, {"hi", node.interval.hi().str()}, {"rounds", node.rounds}};
    if (with_fragments) {
      json frag = json::array();
      for (const auto& m : node.fragment) frag.push_back(to_json(m));
      n["fragment"] = std::move(frag);
    }
    nodes[word.str()] = std::move(n);
  }
  return json{{"variant", std::string(to_string(tree.variant.kind))},
              {"parameters", parameters(tree.variant)},
              {"pinned", std::string(to_string(tree.pinned))},
              {"brancher", std::string(to_string(tree.brancher))},
              {"depth", tree.depth},
              {"nodes", std::move(nodes)}};
}

inline json to_json(const LevelReport& r) {
  return json{{"level", r.level},
              {"count", r.count},
              {"max_diameter", r.max_diameter.str()},
              {"total_length", r.total_length.str()}};
}

}  // namespace io

/// Flat table, one row per level.
inline std::string level_table(const std::vector<LevelReport>& reports) {
  std::ostringstream out;
  out << "level,count,max_diameter,total_length\n";
  for (const auto& r : reports) {
    out << r.level << ',' << r.count << ',' << r.max_diameter.str() << ',' << r.total_length.str() << '\n';
  }
  return out.str();
}

}  // namespace intergame
