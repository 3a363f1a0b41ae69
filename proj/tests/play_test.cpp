#include <gtest/gtest.h>

#include "intergame/play.hpp"
#include "intergame/registry.hpp"

using namespace intergame;

namespace {

Interval iv(const char* lo, const char* hi) { return Interval(Rational::parse(lo), Rational::parse(hi)); }

// Oversized on purpose: ignores the required length.
Strategy broken_bob() {
  Strategy s;
  s.name = "broken";
  s.owner = Player::bob;
  s.rule = [](const GameState& st) {
    if (st.history().empty()) return default_opening();
    return st.last().interval;
  };
  return s;
}

}  // namespace

TEST(Play, CenterPinPinsZero) {
  const auto v = GameVariant::schmidt(Rational(4, 5), Rational(1, 2));
  for (const char* alice : {"align-left", "align-right", "split-thirds", "random-legal:5"}) {
    const Transcript t = play(v, bob_center_pin(Rational(0)), make_strategy(alice, Player::alice), iv("-1/2", "1/2"),
                              20, TargetDescriptor::co_singleton(Rational(0)));
    EXPECT_EQ(t.verdict, Verdict::bob_wins) << alice;
    EXPECT_EQ(t.bracket.length(), pow(Rational(2, 5), 20));
    EXPECT_TRUE(t.bracket.contains(Rational(0)));
    EXPECT_EQ(t.moves.size(), moves_for_horizon(20));
    EXPECT_EQ(t.certificate, Certificate::pinned(Rational(0)));
  }
}

TEST(Play, UndecidableTargetLeavesVerdictOpen) {
  const auto v = GameVariant::schmidt(Rational(4, 5), Rational(1, 2));
  const Transcript t = play(v, bob_center_pin(Rational(0)), aligned(Player::alice, Placement::left), iv("-1/2", "1/2"),
                            20, TargetDescriptor::undecidable());
  EXPECT_EQ(t.verdict, Verdict::undecided);
  EXPECT_EQ(t.bracket.length(), pow(Rational(2, 5), 20));
  EXPECT_EQ(t.certificate.kind, Certificate::Kind::pinned_point);
}

TEST(Play, PredicateTargetDecidesThroughCertificate) {
  const auto v = GameVariant::schmidt(Rational(4, 5), Rational(1, 2));
  const auto positive = TargetDescriptor::predicate("positive", [](const Rational& r) { return std::optional(r.sign() > 0); });
  const Transcript t = play(v, bob_center_pin(Rational(1, 3)), aligned(Player::alice, Placement::right), std::nullopt, 5,
                            positive);
  EXPECT_EQ(t.verdict, Verdict::alice_wins);
}

TEST(Play, BrokenStrategyIsReported) {
  try {
    play(GameVariant::schmidt(Rational(1, 2), Rational(1, 2)), broken_bob(), aligned(Player::alice, Placement::left),
         std::nullopt, 3, TargetDescriptor::undecidable());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::strategy_illegal_move);
    EXPECT_NE(e.detail().find("broken"), std::string::npos);
    EXPECT_NE(e.detail().find("wrong-length"), std::string::npos);
  }
}

TEST(Play, Preconditions) {
  const auto v = GameVariant::banach_mazur();
  EXPECT_THROW(play(v, split_thirds(Player::bob), split_thirds(Player::alice), std::nullopt, 0,
                    TargetDescriptor::undecidable()),
               Error);
  EXPECT_THROW(play(v, split_thirds(Player::alice), split_thirds(Player::alice), std::nullopt, 2,
                    TargetDescriptor::undecidable()),
               Error);
}

TEST(Play, DeterministicAndReplayable) {
  const auto v = GameVariant::schmidt(Rational(2, 3), Rational(3, 4));
  auto once = [&] {
    return play(v, bob_endpoint_pin(Placement::left), random_legal(Player::alice, 77), iv("1/7", "9/7"), 12,
                TargetDescriptor::undecidable());
  };
  const Transcript a = once();
  EXPECT_EQ(a, once());
  const GameState s = replay(a);
  EXPECT_TRUE(s.finished());
  EXPECT_EQ(s.history(), a.moves);
  EXPECT_EQ(bracket(s), a.bracket);
}

TEST(Play, McMullenBracketIsLastBobMove) {
  const Transcript t = play(GameVariant::mcmullen(Rational(1, 5)), aligned(Player::bob, Placement::left),
                            split_thirds(Player::alice), std::nullopt, 6, TargetDescriptor::undecidable());
  EXPECT_EQ(t.moves.back().player, Player::bob);
  EXPECT_EQ(t.bracket, t.moves.back().interval);
  EXPECT_EQ(t.bracket.length(), pow(Rational(1, 5), 6));
}

TEST(Adjudicate, EscapedPinnedPointIsAnInvariantViolation) {
  GameState s = initial_state(GameVariant::banach_mazur());
  s = apply(s, Move{Player::bob, iv("0", "1")});
  try {
    adjudicate(s, {Certificate::pinned(Rational(2))}, TargetDescriptor::co_singleton(Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invariant_violation);
  }
  const auto conflict = adjudicate(s, {Certificate::pinned(Rational(0)), Certificate::pinned(Rational(1))},
                                   TargetDescriptor::co_singleton(Rational(0)));
  EXPECT_EQ(conflict.verdict, Verdict::undecided);
}
