#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "intergame/error.hpp"
#include "intergame/interval.hpp"
#include "intergame/rational.hpp"

namespace intergame {

enum class Player { bob, alice };

inline Player other(Player p) { return p == Player::bob ? Player::alice : Player::bob; }

inline std::string_view to_string(Player p) { return p == Player::bob ? "bob" : "alice"; }

inline Player parse_player(std::string_view s) {
  if (s == "bob") return Player::bob;
  if (s == "alice") return Player::alice;
  throw Error(ErrorCode::parse_error, "unknown player '" + std::string(s) + "'");
}

enum class GameKind { banach_mazur, schmidt, mcmullen };

inline std::string_view to_string(GameKind k) {
  switch (k) {
    case GameKind::banach_mazur: return "banach-mazur";
    case GameKind::schmidt: return "schmidt";
    case GameKind::mcmullen: return "mcmullen";
  }
  return "?";
}

inline GameKind parse_game_kind(std::string_view s) {
  if (s == "banach-mazur" || s == "bm") return GameKind::banach_mazur;
  if (s == "schmidt") return GameKind::schmidt;
  if (s == "mcmullen") return GameKind::mcmullen;
  throw Error(ErrorCode::parse_error, "unknown game variant '" + std::string(s) + "'");
}

/// Which game is played and with which parameters. Parameters that a variant
/// does not use are left at zero / empty.
struct GameVariant {
  GameKind kind = GameKind::banach_mazur;
  Rational alpha;                 // Schmidt
  Rational beta;                  // Schmidt, McMullen
  std::optional<Rational> shrink;  // Banach-Mazur; empty disables the rule

  static GameVariant banach_mazur(std::optional<Rational> shrink = Rational(1, 2)) {
    return {GameKind::banach_mazur, Rational(), Rational(), std::move(shrink)};
  }
  static GameVariant schmidt(Rational alpha, Rational beta) {
    return {GameKind::schmidt, std::move(alpha), std::move(beta), std::nullopt};
  }
  static GameVariant mcmullen(Rational beta) {
    return {GameKind::mcmullen, Rational(), std::move(beta), std::nullopt};
  }

  /// Throws bad-parameters when out of range.
  void validate() const {
    auto open_unit = [](const Rational& r) { return r.sign() > 0 && r < 1; };
    switch (kind) {
      case GameKind::banach_mazur:
        if (shrink && !open_unit(*shrink)) {
          throw Error(ErrorCode::bad_parameters, "shrink factor must lie in (0,1), got " + shrink->str());
        }
        break;
      case GameKind::schmidt:
        if (!open_unit(alpha) || !open_unit(beta)) {
          throw Error(ErrorCode::bad_parameters,
                      "Schmidt needs 0 < alpha, beta < 1, got alpha=" + alpha.str() + " beta=" + beta.str());
        }
        break;
      case GameKind::mcmullen:
        if (beta.sign() <= 0 || beta >= Rational(1, 3)) {
          throw Error(ErrorCode::bad_parameters, "McMullen needs 0 < beta < 1/3, got beta=" + beta.str());
        }
        break;
    }
  }

  friend bool operator==(const GameVariant&, const GameVariant&) = default;
};

struct Move {
  Player player = Player::bob;
  Interval interval;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class ViolationCode { wrong_player, not_nested, wrong_length, not_in_complement, not_shrinking, degenerate };

inline std::string_view to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::wrong_player: return "wrong-player";
    case ViolationCode::not_nested: return "not-nested";
    case ViolationCode::wrong_length: return "wrong-length";
    case ViolationCode::not_in_complement: return "not-in-complement";
    case ViolationCode::not_shrinking: return "not-shrinking";
    case ViolationCode::degenerate: return "degenerate";
  }
  return "?";
}

struct Violation {
  ViolationCode code;
  std::string detail;

  std::string message() const { return std::string(to_string(code)) + ": " + detail; }
  friend bool operator==(const Violation&, const Violation&) = default;
};

class IllegalMove : public Error {
 public:
  explicit IllegalMove(Violation v) : Error(ErrorCode::illegal_move, v.message()), violation_(std::move(v)) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

/// Immutable position: the variant plus the alternating move history
/// B_0, A_0, B_1, A_1, ... Bob always opens.
class GameState {
 public:
  const GameVariant& variant() const { return variant_; }
  const std::vector<Move>& history() const { return history_; }
  bool finished() const { return finished_; }
  Player to_move() const { return history_.size() % 2 == 0 ? Player::bob : Player::alice; }

  /// Number of completed Bob moves after the opening, i.e. n when the last move is B_n.
  std::size_t bob_moves() const { return (history_.size() + 1) / 2; }

  const Move& last() const {
    if (history_.empty()) throw Error(ErrorCode::empty_history, "no moves yet");
    return history_.back();
  }
  /// Most recent move by `p`.
  const Move& last_of(Player p) const {
    for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
      if (it->player == p) return *it;
    }
    throw Error(ErrorCode::empty_history, std::string("no move by ") + std::string(to_string(p)));
  }

  GameState finish() const {
    GameState s = *this;
    s.finished_ = true;
    return s;
  }

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState initial_state(const GameVariant& variant);
  friend GameState apply(const GameState& state, const Move& move);
  // Appends without checking; only `apply` may call this.
  GameState appended(const Move& move) const {
    GameState s = *this;
    s.history_.push_back(move);
    return s;
  }

  GameVariant variant_;
  std::vector<Move> history_;
  bool finished_ = false;
};

inline GameState initial_state(const GameVariant& variant) {
  variant.validate();
  GameState s;
  s.variant_ = variant;
  return s;
}

/// Everything a legal next move must satisfy. Derived from the rules of the
/// variant and the history; shared by legality checks, strategies and hints.
struct MoveConstraint {
  Player mover = Player::bob;
  std::optional<Interval> host;          // empty: opening move, any nondegenerate interval
  std::vector<Interval> regions;         // move must lie inside one of these
  std::optional<Rational> exact_length;
  std::optional<Rational> max_length;    // Banach-Mazur shrink cap for Bob
};

inline MoveConstraint constraint(const GameState& state) {
  MoveConstraint c;
  c.mover = state.to_move();
  const auto& h = state.history();
  if (h.empty()) return c;

  const GameVariant& v = state.variant();
  const Interval& prev = h.back().interval;
  c.host = prev;
  c.regions = {prev};
  switch (v.kind) {
    case GameKind::banach_mazur:
      if (c.mover == Player::bob && v.shrink) {
        c.max_length = *v.shrink * state.last_of(Player::bob).interval.length();
      }
      break;
    case GameKind::schmidt:
      c.exact_length = (c.mover == Player::alice ? v.alpha : v.beta) * prev.length();
      break;
    case GameKind::mcmullen: {
      const Interval& bob_prev = state.last_of(Player::bob).interval;
      c.exact_length = v.beta * bob_prev.length();
      if (c.mover == Player::bob) {
        c.host = bob_prev;
        c.regions = gap_components(bob_prev, prev);
      }
      break;
    }
  }
  return c;
}

/// First rule the move breaks, or nothing when it is legal. Never mutates.
inline std::optional<Violation> check_legal(const GameState& state, const Move& move) {
  if (state.finished()) throw Error(ErrorCode::game_finished, "game already finished");
  const Interval& i = move.interval;
  if (move.player != state.to_move()) {
    return Violation{ViolationCode::wrong_player,
                     std::string(to_string(state.to_move())) + " is to move, not " + std::string(to_string(move.player))};
  }
  if (i.degenerate()) {
    return Violation{ViolationCode::degenerate, "move " + to_string(i) + " has zero length"};
  }
  const MoveConstraint c = constraint(state);
  if (!c.host) return std::nullopt;
  if (!c.host->contains(i)) {
    return Violation{ViolationCode::not_nested, to_string(i) + " is not inside " + to_string(*c.host)};
  }
  bool in_region = false;
  for (const auto& r : c.regions) in_region = in_region || r.contains(i);
  if (!in_region) {
    return Violation{ViolationCode::not_in_complement,
                     to_string(i) + " meets the interior of Alice's " + to_string(state.last().interval)};
  }
  if (c.exact_length && i.length() != *c.exact_length) {
    return Violation{ViolationCode::wrong_length,
                     "length " + i.length().str() + " but the rules require " + c.exact_length->str()};
  }
  if (c.max_length && i.length() > *c.max_length) {
    return Violation{ViolationCode::not_shrinking,
                     "length " + i.length().str() + " exceeds the shrink cap " + c.max_length->str()};
  }
  return std::nullopt;
}

inline GameState apply(const GameState& state, const Move& move) {
  if (auto v = check_legal(state, move)) throw IllegalMove(std::move(*v));
  return state.appended(move);
}

/// Finite-horizon witness for the intersection: the last move for nested
/// games, the last Bob move for McMullen's game.
inline Interval bracket(const GameState& state) {
  if (state.history().empty()) throw Error(ErrorCode::empty_history, "bracket of an empty game");
  if (state.variant().kind == GameKind::mcmullen) return state.last_of(Player::bob).interval;
  return state.last().interval;
}

/// Left-aligned placement of length `len` in the largest piece of
/// host \ obstacle (leftmost on ties), if any piece is long enough.
inline std::optional<Interval> mcmullen_gap_witness(const Interval& host, const Interval& obstacle, const Rational& len) {
  const auto gaps = gap_components(host, obstacle);
  const Interval* best = nullptr;
  for (const auto& g : gaps) {
    if (best == nullptr || g.length() > best->length()) best = &g;
  }
  if (best == nullptr || best->length() < len) return std::nullopt;
  return place_subinterval(*best, len, anchor::Left{});
}

inline Interval mcmullen_reply_witness(const GameState& state) {
  if (state.variant().kind != GameKind::mcmullen || state.to_move() != Player::bob || state.history().empty()) {
    throw Error(ErrorCode::precondition, "reply witness needs a McMullen game with Bob answering an Alice move");
  }
  const Interval& host = state.last_of(Player::bob).interval;
  const Interval& obstacle = state.last().interval;
  auto w = mcmullen_gap_witness(host, obstacle, state.variant().beta * host.length());
  if (!w) {
    throw Error(ErrorCode::no_legal_reply, "no gap of " + to_string(host) + " minus " + to_string(obstacle) + " fits");
  }
  return *w;
}

}  // namespace intergame
