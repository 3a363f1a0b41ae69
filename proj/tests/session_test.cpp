#include <filesystem>
#include <random>
#include <thread>

#include <unistd.h>

#include <gtest/gtest.h>

#include "intergame/session.hpp"

using namespace intergame;
namespace fs = std::filesystem;

namespace {

Interval iv(const char* lo, const char* hi) { return Interval(Rational::parse(lo), Rational::parse(hi)); }

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("intergame-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

SessionConfig alice_vs_center_pin(std::size_t horizon = 10) {
  SessionConfig c;
  c.variant = GameVariant::schmidt(Rational(4, 5), Rational(1, 2));
  c.human = Player::alice;
  c.engine_strategy = "bob-center-pin";
  c.target = TargetDescriptor::co_singleton(Rational(0));
  c.horizon = horizon;
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io_error;
}

}  // namespace

TEST(CreateSession, EngineOpens) {
  SessionManager m;
  const SessionView v = m.create_session(alice_vs_center_pin());
  ASSERT_EQ(v.state.history().size(), 1u);
  EXPECT_EQ(v.state.history()[0].interval, iv("-1/2", "1/2"));
  EXPECT_EQ(v.status, SessionStatus::awaiting_human);
  EXPECT_EQ(v.strategies.at(Player::bob), "bob-center-pin");
}

TEST(CreateSession, Rejections) {
  SessionManager m;
  SessionConfig dense;
  dense.variant = GameVariant::schmidt(Rational(3, 5), Rational(1, 2));
  dense.human = Player::bob;
  dense.engine_strategy = "alice-dense-pin";
  EXPECT_EQ(code_of([&] { m.create_session(dense); }), ErrorCode::inapplicable_strategy);

  SessionConfig mc;
  mc.variant = GameVariant::mcmullen(Rational(1, 3));
  mc.human = Player::alice;
  mc.engine_strategy = "align-left";
  EXPECT_EQ(code_of([&] { m.create_session(mc); }), ErrorCode::bad_parameters);

  SessionConfig unknown = alice_vs_center_pin();
  unknown.engine_strategy = "nope";
  EXPECT_EQ(code_of([&] { m.create_session(unknown); }), ErrorCode::unknown_strategy);
  EXPECT_TRUE(m.ids().empty());
}

TEST(SubmitMove, EngineRepliesCentered) {
  SessionManager m;
  const SessionView v = m.create_session(alice_vs_center_pin());
  const SessionView after = m.submit_move(v.id, iv("-1/2", "3/10"));
  ASSERT_EQ(after.state.history().size(), 3u);
  EXPECT_EQ(after.state.history()[2].interval, iv("-1/5", "1/5"));
  EXPECT_EQ(after.status, SessionStatus::awaiting_human);
}

TEST(SubmitMove, IllegalMoveLeavesSessionUnchanged) {
  SessionManager m;
  const SessionView v = m.create_session(alice_vs_center_pin());
  try {
    m.submit_move(v.id, iv("-1/2", "0"));
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_EQ(e.violation().code, ViolationCode::wrong_length);
  }
  EXPECT_EQ(m.get(v.id).state, v.state);
  EXPECT_EQ(code_of([&] { m.submit_move("missing", iv("0", "1")); }), ErrorCode::unknown_session);
}

TEST(SubmitMove, FinishedSessionRejectsMoves) {
  auto store = std::make_shared<TranscriptStore>(fresh_dir("finish"));
  SessionManager m(store);
  SessionView v = m.create_session(alice_vs_center_pin(2));
  v = m.submit_move(v.id, iv("-1/2", "3/10"));
  v = m.submit_move(v.id, iv("-1/5", "3/25"));
  EXPECT_EQ(v.status, SessionStatus::finished);
  ASSERT_TRUE(v.result);
  EXPECT_EQ(v.result->verdict, Verdict::bob_wins);
  EXPECT_EQ(code_of([&] { m.submit_move(v.id, iv("0", "1/100")); }), ErrorCode::not_your_turn);

  // The stored record replays to the same final state.
  const Transcript t = store->get(v.id);
  EXPECT_EQ(t, transcript_of(v));
  EXPECT_EQ(replay(t), v.state);
}

TEST(Hint, SchmidtLeftEndpointRange) {
  SessionManager m;
  SessionConfig c;
  c.variant = GameVariant::schmidt(Rational(1, 2), Rational(1, 2));
  c.human = Player::alice;
  c.engine_strategy = "align-left";
  c.b0 = iv("0", "1");
  const SessionView v = m.create_session(c);
  const MoveHint h = m.hint_legal(v.id);
  EXPECT_EQ(h.mover, Player::alice);
  EXPECT_EQ(*h.host, iv("0", "1"));
  EXPECT_EQ(*h.exact_length, Rational(1, 2));
  ASSERT_EQ(h.regions.size(), 1u);
  EXPECT_EQ(*h.regions[0].left_endpoints, iv("0", "1/2"));
}

TEST(Hint, McMullenGapsForHumanBob) {
  SessionManager m;
  SessionConfig c;
  c.variant = GameVariant::mcmullen(Rational(1, 5));
  c.human = Player::bob;
  c.engine_strategy = "split-thirds";
  SessionView v = m.create_session(c);
  EXPECT_TRUE(v.state.history().empty());
  EXPECT_FALSE(m.hint_legal(v.id).host);
  v = m.submit_move(v.id, iv("0", "1"));
  EXPECT_EQ(v.state.last().interval, iv("2/5", "3/5"));
  const MoveHint h = m.hint_legal(v.id);
  ASSERT_EQ(h.regions.size(), 2u);
  EXPECT_EQ(h.regions[0].region, iv("0", "2/5"));
  EXPECT_EQ(*h.regions[0].left_endpoints, iv("0", "1/5"));
  EXPECT_EQ(*h.regions[1].left_endpoints, iv("3/5", "4/5"));
}

TEST(Hint, BanachMazurCap) {
  SessionManager m;
  SessionConfig c;
  c.variant = GameVariant::banach_mazur();
  c.human = Player::bob;
  c.engine_strategy = "split-thirds";
  SessionView v = m.create_session(c);
  v = m.submit_move(v.id, iv("0", "1"));
  const MoveHint h = m.hint_legal(v.id);
  EXPECT_EQ(*h.host, iv("1/3", "2/3"));
  EXPECT_EQ(*h.max_length, Rational(1, 2));
  EXPECT_FALSE(h.exact_length);
}

TEST(Session, StrategyVersusStrategyFinishesOnCreate) {
  auto store = std::make_shared<TranscriptStore>(fresh_dir("auto"));
  SessionManager m(store);
  SessionConfig c;
  c.variant = GameVariant::schmidt(Rational(1, 2), Rational(4, 5));
  c.engine_strategy = "align-right";
  c.opponent_strategy = "alice-dense-pin";
  c.target = TargetDescriptor::enumeration();
  c.horizon = 6;
  const SessionView v = m.create_session(c);
  EXPECT_EQ(v.status, SessionStatus::finished);
  EXPECT_EQ(v.result->verdict, Verdict::alice_wins);
  EXPECT_EQ(store->ids(), std::vector<std::string>{v.id});
}

TEST(TranscriptStore, AppendOnlyAndBitExact) {
  const fs::path dir = fresh_dir("store");
  int day = 1;
  auto store = std::make_shared<TranscriptStore>(dir, [&] { return "2026-01-0" + std::to_string(day); });
  const Transcript t = play(GameVariant::banach_mazur(), split_thirds(Player::bob), split_thirds(Player::alice),
                            std::nullopt, 3, TargetDescriptor::undecidable());
  store->append("a", t);
  store->append("b", t);
  day = 2;
  store->append("c", t);
  EXPECT_EQ(code_of([&] { store->append("a", t); }), ErrorCode::duplicate_id);
  EXPECT_EQ(store->raw("b"), serialize(t));
  EXPECT_TRUE(fs::exists(dir / "transcripts-2026-01-01.ndjson"));
  EXPECT_TRUE(fs::exists(dir / "transcripts-2026-01-02.ndjson"));
  EXPECT_EQ(code_of([&] { store->raw("zzz"); }), ErrorCode::not_found);

  // A fresh store over the same directory sees the same records.
  TranscriptStore reopened(dir);
  EXPECT_EQ(reopened.ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(reopened.get("c"), t);
}

TEST(Session, ConcurrentSessionsStayIsolated) {
  auto store = std::make_shared<TranscriptStore>(fresh_dir("concurrent"));
  SessionManager m(store);
  constexpr int kThreads = 8;
  std::vector<std::thread> workers;
  std::vector<SessionView> finals(kThreads);
  for (int i = 0; i < kThreads; ++i) {
    workers.emplace_back([&, i] {
      SessionConfig c = alice_vs_center_pin(6);
      c.engine_strategy = "bob-center-pin:" + std::to_string(i) + "/1";
      SessionView v = m.create_session(c);
      while (v.status != SessionStatus::finished) {
        const MoveHint h = m.hint_legal(v.id);
        const Interval& r = *h.regions[0].left_endpoints;
        const Rational lo = i % 2 ? r.lo() : r.hi();
        v = m.submit_move(v.id, Interval(lo, lo + *h.exact_length));
      }
      finals[i] = v;
    });
  }
  for (auto& t : workers) t.join();
  for (int i = 0; i < kThreads; ++i) {
    EXPECT_TRUE(bracket(finals[i].state).contains(Rational(i)));
    EXPECT_EQ(replay(store->get(finals[i].id)), finals[i].state);
  }
  EXPECT_EQ(store->ids().size(), static_cast<std::size_t>(kThreads));
}
