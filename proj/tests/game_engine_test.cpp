#include <random>

#include <gtest/gtest.h>

#include "intergame/game.hpp"

using namespace intergame;

namespace {

Interval iv(const char* lo, const char* hi) { return Interval(Rational::parse(lo), Rational::parse(hi)); }
Move bob(const char* lo, const char* hi) { return Move{Player::bob, iv(lo, hi)}; }
Move alice(const char* lo, const char* hi) { return Move{Player::alice, iv(lo, hi)}; }

GameState play_out(const GameVariant& v, std::initializer_list<Move> moves) {
  GameState s = initial_state(v);
  for (const auto& m : moves) s = apply(s, m);
  return s;
}

std::optional<ViolationCode> verdict(const GameState& s, const Move& m) {
  const auto v = check_legal(s, m);
  return v ? std::optional(v->code) : std::nullopt;
}

}  // namespace

TEST(InitialState, ValidatesParameters) {
  const GameState s = initial_state(GameVariant::schmidt(Rational(1, 2), Rational(1, 2)));
  EXPECT_TRUE(s.history().empty());
  EXPECT_EQ(s.to_move(), Player::bob);
  EXPECT_FALSE(s.finished());

  EXPECT_NO_THROW(initial_state(GameVariant::mcmullen(Rational(1, 4))));
  for (const Rational& beta : {Rational(1, 3), Rational(0), Rational(1, 2), Rational(-1, 5)}) {
    try {
      initial_state(GameVariant::mcmullen(beta));
      FAIL() << beta;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::bad_parameters);
    }
  }
  EXPECT_THROW(initial_state(GameVariant::schmidt(Rational(1), Rational(1, 2))), Error);
  EXPECT_THROW(initial_state(GameVariant::schmidt(Rational(1, 2), Rational(0))), Error);
  EXPECT_THROW(initial_state(GameVariant::banach_mazur(Rational(1))), Error);
  EXPECT_NO_THROW(initial_state(GameVariant::banach_mazur(std::nullopt)));
}

TEST(CheckLegal, SchmidtExamples) {
  const auto v = GameVariant::schmidt(Rational(1, 2), Rational(1, 2));
  const GameState s = play_out(v, {bob("0", "1")});
  EXPECT_EQ(verdict(s, alice("0", "1/2")), std::nullopt);
  EXPECT_EQ(verdict(s, alice("0", "1/3")), ViolationCode::wrong_length);
  EXPECT_EQ(verdict(s, bob("0", "1/2")), ViolationCode::wrong_player);
  EXPECT_EQ(verdict(s, alice("1/2", "1/2")), ViolationCode::degenerate);
  EXPECT_EQ(verdict(s, alice("3/4", "5/4")), ViolationCode::not_nested);
}

TEST(CheckLegal, McMullenExamples) {
  const auto v = GameVariant::mcmullen(Rational(1, 4));
  const GameState s = play_out(v, {bob("0", "1"), alice("3/8", "5/8")});
  EXPECT_EQ(verdict(s, bob("0", "1/4")), std::nullopt);
  EXPECT_EQ(verdict(s, bob("1/8", "3/8")), std::nullopt);  // touches the obstacle
  EXPECT_EQ(verdict(s, bob("1/4", "1/2")), ViolationCode::not_in_complement);
  EXPECT_EQ(verdict(s, bob("0", "1/8")), ViolationCode::wrong_length);
  EXPECT_EQ(verdict(s, bob("7/8", "9/8")), ViolationCode::not_nested);

  const GameState a = play_out(v, {bob("0", "1")});
  EXPECT_EQ(verdict(a, alice("0", "1/4")), std::nullopt);
  EXPECT_EQ(verdict(a, alice("0", "1/2")), ViolationCode::wrong_length);
}

TEST(CheckLegal, BanachMazurShrinkRule) {
  const GameState s = play_out(GameVariant::banach_mazur(), {bob("0", "1"), alice("0", "9/10")});
  EXPECT_EQ(verdict(s, bob("0", "1/2")), std::nullopt);
  EXPECT_EQ(verdict(s, bob("0", "3/5")), ViolationCode::not_shrinking);
  const GameState free = play_out(GameVariant::banach_mazur(std::nullopt), {bob("0", "1"), alice("0", "9/10")});
  EXPECT_EQ(verdict(free, bob("0", "9/10")), std::nullopt);
  // Alice is never capped.
  EXPECT_EQ(verdict(play_out(GameVariant::banach_mazur(), {bob("0", "1")}), alice("0", "1")), std::nullopt);
}

TEST(CheckLegal, FinishedGameRejectsQueries) {
  const GameState s = play_out(GameVariant::banach_mazur(), {bob("0", "1")}).finish();
  try {
    check_legal(s, alice("0", "1/2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::game_finished);
  }
}

TEST(Apply, AppendsAndLeavesOriginalUntouched) {
  const auto v = GameVariant::schmidt(Rational(1, 2), Rational(1, 2));
  const GameState s = play_out(v, {bob("0", "1")});
  const GameState copy = s;
  const GameState t = apply(s, alice("0", "1/2"));
  EXPECT_EQ(t.history().size(), s.history().size() + 1);
  EXPECT_EQ(t.to_move(), Player::bob);
  try {
    apply(s, alice("0", "1/3"));
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_EQ(e.code(), ErrorCode::illegal_move);
    EXPECT_EQ(e.violation().code, ViolationCode::wrong_length);
  }
  EXPECT_EQ(s, copy);
}

TEST(Apply, SchmidtLengthsHalveEachMove) {
  const GameState s = play_out(GameVariant::schmidt(Rational(1, 2), Rational(1, 2)),
                               {bob("0", "1"), alice("0", "1/2"), bob("1/4", "1/2"), alice("1/4", "3/8")});
  std::vector<Rational> lengths;
  for (const auto& m : s.history()) lengths.push_back(m.interval.length());
  EXPECT_EQ(lengths, (std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(play_out(GameVariant::schmidt(Rational(1, 2), Rational(1, 2)), {bob("0", "1"), alice("0", "1/2")})),
            iv("0", "1/2"));
  EXPECT_EQ(bracket(play_out(GameVariant::mcmullen(Rational(1, 4)), {bob("0", "1"), alice("3/8", "5/8"), bob("0", "1/4")})),
            iv("0", "1/4"));
  EXPECT_EQ(bracket(play_out(GameVariant::banach_mazur(), {bob("0", "1")})), iv("0", "1"));
  EXPECT_THROW(bracket(initial_state(GameVariant::banach_mazur())), Error);
}

TEST(McMullenWitness, Examples) {
  auto witness = [](const char* beta, const char* lo, const char* hi) {
    return mcmullen_reply_witness(play_out(GameVariant::mcmullen(Rational::parse(beta)),
                                           {bob("0", "1"), Move{Player::alice, iv(lo, hi)}}));
  };
  EXPECT_EQ(witness("1/4", "0", "1/4"), iv("1/4", "1/2"));
  EXPECT_EQ(witness("1/4", "3/8", "5/8"), iv("0", "1/4"));
  EXPECT_EQ(witness("3/10", "7/20", "13/20"), iv("0", "3/10"));
  EXPECT_THROW(mcmullen_reply_witness(play_out(GameVariant::mcmullen(Rational(1, 4)), {bob("0", "1")})), Error);
}

// Every Alice obstacle on a grid leaves a legal witness, and the smallest
// larger gap over the grid is the centered one, (1 - beta)/2.
TEST(McMullenWitness, CenteredObstacleIsWorstCase) {
  for (const Rational& beta : {Rational(1, 5), Rational(1, 4), Rational(3, 10)}) {
    const GameState s0 = play_out(GameVariant::mcmullen(beta), {bob("0", "1")});
    Rational worst(1);
    for (long q = 1; q <= 64; ++q) {
      for (long p = 0; p <= q; ++p) {
        const Rational lo(p, q);
        if (lo + beta > 1) continue;
        const GameState s = apply(s0, Move{Player::alice, Interval(lo, lo + beta)});
        const Interval w = mcmullen_reply_witness(s);
        EXPECT_FALSE(check_legal(s, Move{Player::bob, w})) << lo;
        Rational larger(0);
        for (const auto& g : gap_components(Interval(0, 1), Interval(lo, lo + beta))) larger = max(larger, g.length());
        worst = min(worst, larger);
      }
    }
    EXPECT_EQ(worst, (Rational(1) - beta) / 2);
  }
}

// Random legal and illegal moves: check_legal is pure and apply agrees with it.
TEST(CheckLegal, FuzzAgreesWithApply) {
  std::mt19937_64 rng(99);
  const std::vector<GameVariant> variants = {GameVariant::banach_mazur(), GameVariant::schmidt(Rational(2, 3), Rational(3, 7)),
                                             GameVariant::mcmullen(Rational(1, 5))};
  std::uniform_int_distribution<long> coin(0, 3), grid(0, 64);
  for (const auto& v : variants) {
    for (int game = 0; game < 40; ++game) {
      GameState s = initial_state(v);
      s = apply(s, bob("0", "1"));
      for (int step = 0; step < 12; ++step) {
        const MoveConstraint c = constraint(s);
        const Interval& host = *c.host;
        Move m{s.to_move(), host};
        const Rational unit = host.length() / 64;
        // Mostly near-legal candidates, sometimes wild ones.
        Rational len = c.exact_length ? *c.exact_length : host.length() * Rational(grid(rng) + 1, 130);
        if (coin(rng) == 0) len = len * Rational(grid(rng) + 1, 33);
        const Rational lo = coin(rng) == 0 ? host.lo() - unit * grid(rng) : host.lo() + unit * grid(rng);
        m.interval = Interval(lo, lo + len);
        if (coin(rng) == 0) m.player = other(m.player);
        const auto first = check_legal(s, m);
        EXPECT_EQ(first, check_legal(s, m));
        if (first) {
          EXPECT_THROW(apply(s, m), IllegalMove);
          continue;
        }
        const GameState next = apply(s, m);
        EXPECT_TRUE(host.contains(m.interval));
        EXPECT_FALSE(m.interval.degenerate());
        EXPECT_NE(next.to_move(), s.to_move());
        if (v.kind != GameKind::mcmullen) EXPECT_TRUE(bracket(s).contains(bracket(next)));
        s = next;
      }
    }
  }
}

TEST(Schmidt, ExactLengthsAlongAnyLegalPlay) {
  const Rational a(3, 5), b(5, 7);
  GameState s = play_out(GameVariant::schmidt(a, b), {bob("-2", "1")});
  const Rational L(3);
  for (int round = 0; round < 15; ++round) {
    const auto c = constraint(s);
    s = apply(s, Move{s.to_move(), place_subinterval(*c.host, *c.exact_length,
                                                     round % 2 ? AnchorSpec(anchor::Left{}) : AnchorSpec(anchor::Right{}))});
  }
  for (std::size_t i = 0; i < s.history().size(); ++i) {
    const std::size_t n = i / 2;
    const Rational expected = i % 2 == 0 ? L * pow(a * b, n) : L * a * pow(a * b, n);
    EXPECT_EQ(s.history()[i].interval.length(), expected) << i;
  }
}
