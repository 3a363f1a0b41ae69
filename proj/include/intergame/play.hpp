#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/strategy.hpp"
#include "intergame/target.hpp"

namespace intergame {

enum class Verdict { alice_wins, bob_wins, undecided };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::alice_wins: return "alice-wins";
    case Verdict::bob_wins: return "bob-wins";
    case Verdict::undecided: return "undecided-at-horizon";
  }
  return "?";
}

inline Verdict parse_verdict(std::string_view s) {
  if (s == "alice-wins") return Verdict::alice_wins;
  if (s == "bob-wins") return Verdict::bob_wins;
  if (s == "undecided-at-horizon") return Verdict::undecided;
  throw Error(ErrorCode::parse_error, "unknown verdict '" + std::string(s) + "'");
}

/// Record of one finite-horizon play. A horizon of n rounds means the
/// opening B_0 followed by n pairs (A_k, B_{k+1}), i.e. 2n + 1 moves.
struct Transcript {
  GameVariant variant;
  std::vector<Move> moves;
  std::size_t horizon = 0;
  Verdict verdict = Verdict::undecided;
  Certificate certificate;
  Interval bracket;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

inline std::size_t moves_for_horizon(std::size_t horizon) { return 2 * horizon + 1; }

struct Adjudication {
  Verdict verdict = Verdict::undecided;
  Certificate certificate;
};

/// Finite play is decided only through certificates: a pinned point that the
/// target decides settles the game. An infinite intersection is never
/// computed; everything else stays undecided.
inline Adjudication adjudicate(const GameState& state, const std::vector<Certificate>& certs,
                               const TargetDescriptor& target) {
  Adjudication out;
  const Interval b = bracket(state);
  std::optional<Verdict> decided;
  bool conflict = false;
  for (const auto& c : certs) {
    if (c.kind != Certificate::Kind::pinned_point) continue;
    if (!b.contains(c.point)) {
      throw Error(ErrorCode::invariant_violation,
                  "pinned point " + c.point.str() + " escaped the bracket " + to_string(b));
    }
    const auto member = target.decides(c.point);
    if (!member) continue;
    const Verdict v = *member ? Verdict::alice_wins : Verdict::bob_wins;
    if (!decided) {
      decided = v;
      out.certificate = c;
    } else if (*decided != v) {
      conflict = true;
    }
  }
  if (decided && !conflict) {
    out.verdict = *decided;
    return out;
  }
  out.certificate = {};
  for (const auto& c : certs) {
    if (c.kind != Certificate::Kind::none) {
      out.certificate = c;
      break;
    }
  }
  return out;
}

namespace detail {

inline GameState play_move(const GameState& state, const Strategy& s) {
  const Move m = s.move(state);
  if (auto v = check_legal(state, m)) {
    throw Error(ErrorCode::strategy_illegal_move,
                "strategy '" + s.name + "' (" + std::string(to_string(s.owner)) + ") played " + to_string(m.interval) +
                    " as move #" + std::to_string(state.history().size()) + " in " +
                    std::string(to_string(state.variant().kind)) + ": " + v->message());
  }
  return apply(state, m);
}

}  // namespace detail

/// Strategy versus strategy for `horizon` rounds. `b0`, when given, replaces
/// Bob's opening move.
inline Transcript play(const GameVariant& variant, const Strategy& bob, const Strategy& alice,
                       const std::optional<Interval>& b0, std::size_t horizon, const TargetDescriptor& target) {
  if (horizon < 1) throw Error(ErrorCode::precondition, "horizon must be at least 1");
  if (bob.owner != Player::bob || alice.owner != Player::alice) {
    throw Error(ErrorCode::precondition, "strategies are attached to the wrong players");
  }
  for (const Strategy* s : {&bob, &alice}) {
    if (s->applicable && !s->applicable(variant)) {
      throw Error(ErrorCode::inapplicable_parameters, "strategy '" + s->name + "' does not apply to these parameters");
    }
  }
  GameState state = initial_state(variant);
  if (b0) {
    state = apply(state, Move{Player::bob, *b0});
  } else {
    state = detail::play_move(state, bob);
  }
  for (std::size_t round = 0; round < horizon; ++round) {
    state = detail::play_move(state, alice);
    state = detail::play_move(state, bob);
  }
  state = state.finish();

  const Adjudication adj = adjudicate(state, {bob.certificate(state), alice.certificate(state)}, target);
  return Transcript{variant, state.history(), horizon, adj.verdict, adj.certificate, bracket(state)};
}

/// Re-applies every move of a transcript under the rules; throws on the
/// first illegal one.
inline GameState replay(const Transcript& t) {
  GameState state = initial_state(t.variant);
  for (const auto& m : t.moves) state = apply(state, m);
  return t.moves.size() >= moves_for_horizon(t.horizon) ? state.finish() : state;
}

}  // namespace intergame
