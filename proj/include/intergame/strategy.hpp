#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "intergame/enumeration.hpp"
#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/interval.hpp"
#include "intergame/rational.hpp"
#include "intergame/target.hpp"

namespace intergame {

/// Finite-horizon evidence a strategy offers about the infinite play.
struct Certificate {
  enum class Kind { none, pinned_point, escape_bound };

  Kind kind = Kind::none;
  Rational point;         // pinned_point: lies in every bracket
  Rational displacement;  // escape_bound: running endpoint displacement / first own length
  Rational threshold;     // escape_bound: ratio - 1/2

  static Certificate pinned(Rational p) { return {Kind::pinned_point, std::move(p), {}, {}}; }
  static Certificate escape(Rational displacement, Rational threshold) {
    return {Kind::escape_bound, {}, std::move(displacement), std::move(threshold)};
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::string_view to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::none: return "none";
    case Certificate::Kind::pinned_point: return "pinned-point";
    case Certificate::Kind::escape_bound: return "escape-bound";
  }
  return "?";
}

/// A deterministic rule giving the owner's move in every position where the
/// owner is to move. `applicable` guards the parameter regime in which the
/// rule is known to stay legal.
struct Strategy {
  std::string name;
  Player owner = Player::bob;
  std::function<bool(const GameVariant&)> applicable;
  std::function<Interval(const GameState&)> rule;
  std::function<Certificate(const GameState&)> certify;

  Move move(const GameState& state) const { return Move{owner, rule(state)}; }
  Certificate certificate(const GameState& state) const { return certify ? certify(state) : Certificate{}; }
};

inline Interval default_opening() { return Interval(Rational(0), Rational(1)); }

// ---------------------------------------------------------------------------
// Closed forms for the endpoint strategy.

/// (1 - beta) alpha / (1 - alpha beta)
inline Rational displacement_closed_form(const Rational& alpha, const Rational& beta) {
  if (alpha.sign() <= 0 || alpha >= 1 || beta.sign() < 0 || beta >= 1) {
    throw Error(ErrorCode::precondition, "need 0 < alpha < 1 and 0 <= beta < 1");
  }
  return (Rational(1) - beta) * alpha / (Rational(1) - alpha * beta);
}

/// (alpha - alpha beta) * sum_{k=0}^{K} (alpha beta)^k
inline Rational displacement_partial_sum(const Rational& alpha, const Rational& beta, std::size_t K) {
  const Rational ratio = alpha * beta;
  Rational term(1), sum(0);
  for (std::size_t k = 0; k <= K; ++k) {
    sum += term;
    term *= ratio;
  }
  return (alpha - alpha * beta) * sum;
}

/// Smallest K with displacement_partial_sum(alpha, beta, K) > threshold.
inline std::optional<std::size_t> first_round_exceeding(const Rational& alpha, const Rational& beta,
                                                        const Rational& threshold, std::size_t max_rounds = 100000) {
  const Rational ratio = alpha * beta;
  const Rational first = alpha - alpha * beta;
  Rational term = first, sum(0);
  for (std::size_t k = 0; k <= max_rounds; ++k) {
    sum += term;
    if (sum > threshold) return k;
    term *= ratio;
  }
  return std::nullopt;
}

/// Lower bound, in units of the pivot length, on how far right of the pivot
/// center the pinning player's n-th reply starts (n >= 1) when it keeps
/// sharing the right endpoint of the opponent's moves. `own` is the pinning
/// player's ratio, `opp` the opponent's. Holds against every opponent.
inline Rational guaranteed_escape_offset(const Rational& own, const Rational& opp, std::size_t n) {
  Rational offset = Rational(1, 2) - own;
  if (n >= 2) offset += own * displacement_partial_sum(opp, own, n - 2);
  return offset;
}

/// Smallest n >= 1 with guaranteed_escape_offset(...) > 0.
inline std::optional<std::size_t> guaranteed_escape_replies(const Rational& own, const Rational& opp,
                                                            std::size_t max_rounds = 100000) {
  for (std::size_t n = 1; n <= max_rounds; ++n) {
    if (guaranteed_escape_offset(own, opp, n).sign() > 0) return n;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Placement policies shared by the generic strategies.

enum class Placement { left, right, middle };

namespace detail {

inline Rational move_length(const MoveConstraint& c, const Interval& region) {
  if (c.exact_length) return *c.exact_length;
  Rational len = region.length() / 3;
  if (c.max_length) len = min(len, *c.max_length);
  return len;
}

inline std::vector<Interval> feasible_regions(const MoveConstraint& c) {
  std::vector<Interval> out;
  for (const auto& r : c.regions) {
    if (r.length().sign() > 0 && move_length(c, r) <= r.length()) out.push_back(r);
  }
  return out;
}

inline Interval place(const GameState& state, Placement where) {
  const MoveConstraint c = constraint(state);
  if (!c.host) return default_opening();
  const auto regions = feasible_regions(c);
  if (regions.empty()) throw Error(ErrorCode::no_legal_reply, "no region admits a legal move");
  switch (where) {
    case Placement::left: return place_subinterval(regions.front(), move_length(c, regions.front()), anchor::Left{});
    case Placement::right: return place_subinterval(regions.back(), move_length(c, regions.back()), anchor::Right{});
    case Placement::middle: {
      const Interval* best = &regions.front();
      for (const auto& r : regions) {
        if (r.length() > best->length()) best = &r;
      }
      return place_subinterval(*best, move_length(c, *best), anchor::Centered{best->center()});
    }
  }
  return default_opening();
}

inline bool is_schmidt(const GameVariant& v) { return v.kind == GameKind::schmidt; }
inline bool any_variant(const GameVariant&) { return true; }

}  // namespace detail

/// Aligned placement: "align-left" / "align-right". In McMullen's game Bob
/// uses the leftmost (rightmost) gap that can hold his move.
inline Strategy aligned(Player owner, Placement side) {
  Strategy s;
  s.name = side == Placement::left ? "align-left" : "align-right";
  s.owner = owner;
  s.applicable = detail::any_variant;
  s.rule = [side](const GameState& st) { return detail::place(st, side); };
  return s;
}

/// "split-thirds": the middle third of the host in the Banach-Mazur game,
/// a centered move of the required length otherwise.
inline Strategy split_thirds(Player owner) {
  Strategy s;
  s.name = "split-thirds";
  s.owner = owner;
  s.applicable = detail::any_variant;
  s.rule = [](const GameState& st) { return detail::place(st, Placement::middle); };
  return s;
}

/// "random-legal:<seed>": a uniformly drawn legal placement on a grid of
/// 2^16 offsets; a pure function of the seed and the position.
inline Strategy random_legal(Player owner, std::uint64_t seed) {
  Strategy s;
  s.name = "random-legal:" + std::to_string(seed);
  s.owner = owner;
  s.applicable = detail::any_variant;
  s.rule = [seed](const GameState& st) {
    const MoveConstraint c = constraint(st);
    if (!c.host) return default_opening();
    const auto regions = detail::feasible_regions(c);
    if (regions.empty()) throw Error(ErrorCode::no_legal_reply, "no region admits a legal move");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(st.history().size())};
    std::mt19937_64 rng(seq);
    const Interval& r = regions[std::uniform_int_distribution<std::size_t>(0, regions.size() - 1)(rng)];
    Rational len = detail::move_length(c, r);
    if (!c.exact_length) {
      // Free length (Banach-Mazur): anywhere in (0, cap].
      const long k = std::uniform_int_distribution<long>(1, 1 << 16)(rng);
      len = len * Rational(k, 1L << 16);
    }
    const long t = std::uniform_int_distribution<long>(0, 1 << 16)(rng);
    return place_subinterval(r, len, anchor::Offset{(r.length() - len) * Rational(t, 1L << 16)});
  };
  return s;
}

/// Bob recenters every move on x. Legal in Schmidt's game whenever
/// beta <= 2 - 1/alpha: Alice's move keeps x at distance >= (alpha - 1/2)L
/// from its edges, which covers the half-length alpha beta L / 2 of the reply.
inline Strategy bob_center_pin(Rational x, Rational opening_length = Rational(1)) {
  Strategy s;
  s.name = "bob-center-pin";
  s.owner = Player::bob;
  s.applicable = [](const GameVariant& v) {
    return v.kind == GameKind::schmidt && v.beta <= Rational(2) - Rational(1) / v.alpha;
  };
  s.rule = [x, opening_length](const GameState& st) {
    const MoveConstraint c = constraint(st);
    if (c.host && !c.exact_length) throw Error(ErrorCode::precondition, "center pinning needs Schmidt's game");
    const Rational half = (c.host ? *c.exact_length : opening_length) / 2;
    return Interval(x - half, x + half);
  };
  s.certify = [x](const GameState&) { return Certificate::pinned(x); };
  return s;
}

/// Alice picks the first enumerated point y that can be the center of a
/// legal first move and recenters on it forever. Legal whenever
/// alpha <= 2 - 1/beta (the mirror image of bob_center_pin).
inline Strategy alice_dense_pin(DenseEnumeration e = DenseEnumeration()) {
  Strategy s;
  s.name = "alice-dense-pin";
  s.owner = Player::alice;
  s.applicable = [](const GameVariant& v) {
    return v.kind == GameKind::schmidt && v.alpha <= Rational(2) - Rational(1) / v.beta;
  };
  auto pinned = [e](const GameState& st) {
    const Interval& b0 = st.history().front().interval;
    const Rational half = st.variant().alpha * b0.length() / 2;
    return e.first_in(Interval(b0.lo() + half, b0.hi() - half));
  };
  s.rule = [pinned](const GameState& st) {
    const Rational y = pinned(st);
    const Rational half = *constraint(st).exact_length / 2;
    return Interval(y - half, y + half);
  };
  s.certify = [pinned](const GameState& st) {
    return st.history().empty() ? Certificate{} : Certificate::pinned(pinned(st));
  };
  return s;
}

/// Shares the right (or left) endpoint of the opponent's last move. The
/// certificate reports the accumulated shift of the owner's far endpoint.
inline Strategy endpoint_pin(Player owner, Placement side) {
  Strategy s;
  s.name = std::string(to_string(owner)) + (side == Placement::right ? "-endpoint-pin-right" : "-endpoint-pin-left");
  s.owner = owner;
  s.applicable = detail::is_schmidt;
  s.rule = [side](const GameState& st) { return detail::place(st, side); };
  s.certify = [owner, side](const GameState& st) {
    Rational total(0);
    const Interval* first = nullptr;
    const Interval* prev = nullptr;
    for (const auto& m : st.history()) {
      if (m.player != owner) continue;
      if (prev != nullptr) {
        total += side == Placement::right ? m.interval.lo() - prev->lo() : prev->hi() - m.interval.hi();
      } else {
        first = &m.interval;
      }
      prev = &m.interval;
    }
    if (first == nullptr) return Certificate{};
    const Rational& ratio = owner == Player::bob ? st.variant().beta : st.variant().alpha;
    return Certificate::escape(total / first->length(), ratio - Rational(1, 2));
  };
  return s;
}

inline Strategy bob_endpoint_pin(Placement side) { return endpoint_pin(Player::bob, side); }

/// Two legal moves for the player to move with disjoint intervals (left- and
/// right-aligned). Used as the adversary's branching rule in strategy trees.
inline std::pair<Move, Move> splitting_responses(const GameState& state) {
  if (state.history().empty()) throw Error(ErrorCode::precondition, "splitting needs a move to answer");
  const MoveConstraint c = constraint(state);
  const GameVariant& v = state.variant();
  if (v.kind == GameKind::schmidt) {
    const Rational& ratio = c.mover == Player::alice ? v.alpha : v.beta;
    if (ratio >= Rational(1, 2)) {
      throw Error(ErrorCode::cannot_split, std::string(to_string(c.mover)) + "'s ratio " + ratio.str() +
                                               " >= 1/2 leaves no two disjoint replies");
    }
  }
  const auto regions = detail::feasible_regions(c);
  if (regions.empty()) throw Error(ErrorCode::cannot_split, "no legal reply at all");
  Interval left = place_subinterval(regions.front(), detail::move_length(c, regions.front()), anchor::Left{});
  Interval right = place_subinterval(regions.back(), detail::move_length(c, regions.back()), anchor::Right{});
  if (!left.disjoint(right)) {
    throw Error(ErrorCode::cannot_split, "aligned replies " + to_string(left) + " and " + to_string(right) + " meet");
  }
  return {Move{c.mover, left}, Move{c.mover, right}};
}

}  // namespace intergame
