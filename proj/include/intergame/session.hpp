#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/play.hpp"
#include "intergame/registry.hpp"
#include "intergame/serialize.hpp"
#include "intergame/strategy.hpp"
#include "intergame/target.hpp"

namespace intergame {

/// Append-only transcript archive: one newline-delimited file per UTC day
/// plus an index file mapping ids to (file, line). Appends are serialized;
/// every record is written with a single write call and flushed.
class TranscriptStore {
 public:
  using DayFn = std::function<std::string()>;

  explicit TranscriptStore(std::filesystem::path dir, DayFn day = utc_day) : dir_(std::move(dir)), day_(std::move(day)) {
    std::filesystem::create_directories(dir_);
    std::ifstream index(dir_ / "index.ndjson");
    std::string line;
    while (std::getline(index, line)) {
      if (line.empty()) continue;
      const auto j = json::parse(line);
      index_[j.at("id").get<std::string>()] = Entry{j.at("file").get<std::string>(), j.at("line").get<std::size_t>()};
    }
  }

  static std::string utc_day() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[16];
    std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
    return buf;
  }

  void append(const std::string& id, const Transcript& t) {
    const std::string record = serialize(t);
    std::lock_guard lock(mu_);
    if (index_.count(id) != 0) throw Error(ErrorCode::duplicate_id, "transcript '" + id + "' already stored");
    const std::string file = "transcripts-" + day_() + ".ndjson";
    std::size_t& lines = line_counts_[file];
    if (lines == 0) lines = count_lines(dir_ / file);
    write_line(dir_ / file, record);
    const Entry e{file, lines++};
    write_line(dir_ / "index.ndjson", json{{"id", id}, {"file", e.file}, {"line", e.line}}.dump());
    index_[id] = e;
  }

  /// Stored text, byte for byte.
  std::string raw(const std::string& id) const {
    Entry e;
    {
      std::lock_guard lock(mu_);
      const auto it = index_.find(id);
      if (it == index_.end()) throw Error(ErrorCode::not_found, "no transcript '" + id + "'");
      e = it->second;
    }
    std::ifstream in(dir_ / e.file);
    std::string line;
    for (std::size_t i = 0; i <= e.line; ++i) {
      if (!std::getline(in, line)) throw Error(ErrorCode::io_error, "transcript file " + e.file + " is truncated");
    }
    return line;
  }

  Transcript get(const std::string& id) const { return parse_transcript(raw(id)); }

  std::vector<std::string> ids() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [id, e] : index_) out.push_back(id);
    return out;
  }

 private:
  struct Entry {
    std::string file;
    std::size_t line = 0;
  };

  static std::size_t count_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
  }

  static void write_line(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::app | std::ios::binary);
    const std::string line = text + "\n";
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::io_error, "cannot append to " + p.string());
  }

  std::filesystem::path dir_;
  DayFn day_;
  mutable std::mutex mu_;
  std::map<std::string, Entry> index_;
  std::map<std::string, std::size_t> line_counts_;
};

enum class SessionStatus { awaiting_human, awaiting_engine, finished };

inline std::string_view to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::awaiting_human: return "awaiting-human";
    case SessionStatus::awaiting_engine: return "awaiting-engine";
    case SessionStatus::finished: return "finished";
  }
  return "?";
}

struct SessionConfig {
  GameVariant variant;
  std::optional<Player> human;            // empty: strategy against strategy
  std::string engine_strategy;            // plays the side the human does not
  std::string opponent_strategy;          // Alice's strategy when there is no human
  TargetDescriptor target = TargetDescriptor::undecidable();
  std::size_t horizon = 10;
  std::optional<Interval> b0;
};

/// Read-only snapshot handed to callers.
struct SessionView {
  std::string id;
  GameState state;
  std::optional<Player> human;
  std::map<Player, std::string> strategies;
  std::size_t horizon = 0;
  SessionStatus status = SessionStatus::awaiting_human;
  std::optional<Adjudication> result;
  TargetDescriptor target = TargetDescriptor::undecidable();
};

/// What a legal human move must look like right now.
struct MoveHint {
  Player mover = Player::bob;
  std::optional<Interval> host;
  std::optional<Rational> exact_length;
  std::optional<Rational> max_length;
  struct Region {
    Interval region;
    std::optional<Interval> left_endpoints;  // feasible left endpoints for a fixed length
  };
  std::vector<Region> regions;
};

class SessionManager {
 public:
  explicit SessionManager(std::shared_ptr<TranscriptStore> store = nullptr) : store_(std::move(store)) {}

  SessionView create_session(const SessionConfig& cfg) {
    cfg.variant.validate();
    if (cfg.horizon < 1) throw Error(ErrorCode::precondition, "horizon must be at least 1");

    auto s = std::make_shared<Entry>();
    s->horizon = cfg.horizon;
    s->human = cfg.human;
    s->target = cfg.target;
    const StrategyContext ctx{cfg.b0, cfg.target};
    auto attach = [&](Player side, const std::string& name) {
      Strategy strat = make_strategy(name, side, ctx);
      if (strat.applicable && !strat.applicable(cfg.variant)) {
        throw Error(ErrorCode::inapplicable_strategy,
                    "'" + name + "' does not apply to " + std::string(to_string(cfg.variant.kind)) + " with " +
                        io::parameters(cfg.variant).dump());
      }
      s->engines.emplace(side, std::move(strat));
    };
    if (cfg.human) {
      attach(other(*cfg.human), cfg.engine_strategy);
    } else {
      attach(Player::bob, cfg.engine_strategy);
      attach(Player::alice, cfg.opponent_strategy);
    }

    GameState state = initial_state(cfg.variant);
    if (cfg.b0) state = apply(state, Move{Player::bob, *cfg.b0});
    s->state = run_engines(*s, std::move(state));

    std::unique_lock lock(map_mu_);
    s->id = next_id();
    sessions_.emplace(s->id, s);
    lock.unlock();
    std::lock_guard session_lock(s->mu);
    finalize(*s);
    return view_of(*s);
  }

  SessionView get(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    return view_of(*s);
  }

  /// Applies the human move and the engine's answer atomically. On an
  /// illegal move the session is left untouched and IllegalMove is thrown.
  SessionView submit_move(const std::string& id, const Interval& interval) {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    if (s->state.finished()) throw Error(ErrorCode::not_your_turn, "session is finished");
    if (!s->human || s->state.to_move() != *s->human) throw Error(ErrorCode::not_your_turn, "engine is to move");
    GameState next = apply(s->state, Move{*s->human, interval});
    next = run_engines(*s, std::move(next));
    s->state = std::move(next);
    finalize(*s);
    return view_of(*s);
  }

  MoveHint hint_legal(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    if (s->state.finished() || !s->human || s->state.to_move() != *s->human) {
      throw Error(ErrorCode::not_your_turn, "no human move is pending");
    }
    const MoveConstraint c = constraint(s->state);
    MoveHint h{c.mover, c.host, c.exact_length, c.max_length, {}};
    for (const auto& r : c.regions) {
      MoveHint::Region region{r, std::nullopt};
      if (c.exact_length && *c.exact_length <= r.length()) {
        region.left_endpoints = Interval(r.lo(), r.hi() - *c.exact_length);
      }
      h.regions.push_back(std::move(region));
    }
    return h;
  }

  std::vector<std::string> ids() const {
    std::shared_lock lock(map_mu_);
    std::vector<std::string> out;
    for (const auto& [id, s] : sessions_) out.push_back(id);
    return out;
  }

  const std::shared_ptr<TranscriptStore>& store() const { return store_; }

 private:
  struct Entry {
    mutable std::mutex mu;
    std::string id;
    GameState state;
    std::optional<Player> human;
    std::map<Player, Strategy> engines;
    TargetDescriptor target = TargetDescriptor::undecidable();
    std::size_t horizon = 0;
    std::optional<Adjudication> result;
  };

  static bool horizon_reached(const Entry& s, const GameState& st) {
    return st.history().size() >= moves_for_horizon(s.horizon);
  }

  static GameState run_engines(const Entry& s, GameState state) {
    while (!horizon_reached(s, state)) {
      const auto it = s.engines.find(state.to_move());
      if (it == s.engines.end()) break;
      state = detail::play_move(state, it->second);
    }
    return state;
  }

  void finalize(Entry& s) {
    if (s.result || !horizon_reached(s, s.state)) return;
    s.state = s.state.finish();
    std::vector<Certificate> certs;
    for (const auto& [side, strat] : s.engines) certs.push_back(strat.certificate(s.state));
    s.result = adjudicate(s.state, certs, s.target);
    if (store_) {
      store_->append(s.id, Transcript{s.state.variant(), s.state.history(), s.horizon, s.result->verdict,
                                      s.result->certificate, bracket(s.state)});
    }
  }

  static SessionView view_of(const Entry& s) {
    SessionView v;
    v.id = s.id;
    v.state = s.state;
    v.human = s.human;
    for (const auto& [side, strat] : s.engines) v.strategies[side] = strat.name;
    v.horizon = s.horizon;
    v.result = s.result;
    v.target = s.target;
    if (s.state.finished()) {
      v.status = SessionStatus::finished;
    } else if (s.human && s.state.to_move() == *s.human) {
      v.status = SessionStatus::awaiting_human;
    } else {
      v.status = SessionStatus::awaiting_engine;
    }
    return v;
  }

  std::shared_ptr<Entry> find(const std::string& id) const {
    std::shared_lock lock(map_mu_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw Error(ErrorCode::unknown_session, "no session '" + id + "'");
    return it->second;
  }

  std::string next_id() {
    std::ostringstream out;
    out << std::hex << salt_ << '-' << std::dec << ++counter_;
    return out.str();
  }

  std::shared_ptr<TranscriptStore> store_;
  mutable std::shared_mutex map_mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t salt_ = std::random_device{}() & 0xffffffu;
  std::uint64_t counter_ = 0;
};

/// Transcript of a finished session view.
inline Transcript transcript_of(const SessionView& v) {
  if (!v.result) throw Error(ErrorCode::precondition, "session is not finished");
  return Transcript{v.state.variant(), v.state.history(), v.horizon, v.result->verdict, v.result->certificate,
                    bracket(v.state)};
}

}  // namespace intergame
