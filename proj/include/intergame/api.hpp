#pragma once

#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <utility>

#include "intergame/cantor_tree.hpp"
#include "intergame/error.hpp"
#include "intergame/regime.hpp"
#include "intergame/registry.hpp"
#include "intergame/serialize.hpp"
#include "intergame/session.hpp"

// Transport-independent request handling for the session service. The HTTP
// server (http.hpp) and the tests both go through Api::handle.

namespace intergame {

inline constexpr int kSchemaVersion = 1;

struct ApiResponse {
  int status = 200;
  json body;
};

namespace io {

inline json to_json(const SessionView& v) {
  json moves = json::array();
  for (const auto& m : v.state.history()) moves.push_back(to_json(m));
  json strategies = json::object();
  for (const auto& [side, name] : v.strategies) strategies[std::string(to_string(side))] = name;
  json j{{"id", v.id},
         {"variant", std::string(to_string(v.state.variant().kind))},
         {"parameters", parameters(v.state.variant())},
         {"human", v.human ? std::string(to_string(*v.human)) : std::string("none")},
         {"strategies", std::move(strategies)},
         {"horizon", v.horizon},
         {"moves", std::move(moves)},
         {"status", std::string(to_string(v.status))},
         {"to_move", std::string(to_string(v.state.to_move()))},
         {"target", to_json(v.target)}};
  j["bracket"] = v.state.history().empty() ? json(nullptr) : to_json(bracket(v.state));
  if (v.result) {
    j["verdict"] = std::string(to_string(v.result->verdict));
    j["certificate"] = to_json(v.result->certificate);
  }
  return j;
}

inline json to_json(const MoveHint& h) {
  json regions = json::array();
  for (const auto& r : h.regions) {
    json region = to_json(r.region);
    region["left_endpoints"] = r.left_endpoints ? to_json(*r.left_endpoints) : json(nullptr);
    regions.push_back(std::move(region));
  }
  return json{{"mover", std::string(to_string(h.mover))},
              {"host", h.host ? to_json(*h.host) : json(nullptr)},
              {"exact_length", h.exact_length ? json(h.exact_length->str()) : json(nullptr)},
              {"max_length", h.max_length ? json(h.max_length->str()) : json(nullptr)},
              {"regions", std::move(regions)}};
}

inline json to_json(const Violation& v) {
  return json{{"code", std::string(to_string(v.code))}, {"detail", v.detail}};
}

}  // namespace io

class Api {
 public:
  explicit Api(std::shared_ptr<SessionManager> sessions, std::size_t max_tree_depth = 12)
      : sessions_(std::move(sessions)), max_tree_depth_(max_tree_depth) {}

  ApiResponse handle(std::string_view method, const std::string& path, const std::string& body) {
    try {
      return route(method, path, body);
    } catch (const IllegalMove& e) {
      return error(422, e, json{{"violation", io::to_json(e.violation())}});
    } catch (const Error& e) {
      return error(status_for(e.code()), e);
    } catch (const json::exception& e) {
      return error(400, Error(ErrorCode::parse_error, e.what()));
    }
  }

 private:
  static int status_for(ErrorCode c) {
    switch (c) {
      case ErrorCode::unknown_session:
      case ErrorCode::not_found: return 404;
      case ErrorCode::not_your_turn:
      case ErrorCode::game_finished:
      case ErrorCode::duplicate_id: return 409;
      case ErrorCode::illegal_move:
      case ErrorCode::inapplicable_strategy:
      case ErrorCode::inapplicable_parameters:
      case ErrorCode::precondition:
      case ErrorCode::depth_exceeded: return 422;
      case ErrorCode::strategy_illegal_move:
      case ErrorCode::invariant_violation:
      case ErrorCode::chain_step_failed:
      case ErrorCode::io_error: return 500;
      default: return 400;
    }
  }

  static ApiResponse ok(json body, int status = 200) {
    body["schema_version"] = kSchemaVersion;
    return {status, std::move(body)};
  }

  static ApiResponse error(int status, const Error& e, json extra = json::object()) {
    extra["error"] = json{{"code", std::string(to_string(e.code()))}, {"detail", e.detail()}};
    extra["schema_version"] = kSchemaVersion;
    return {status, std::move(extra)};
  }

  static json parse_body(const std::string& body) { return body.empty() ? json::object() : json::parse(body); }

  ApiResponse route(std::string_view method, const std::string& path, const std::string& body) {
    static const std::regex session_re(R"(^/sessions/([^/]+)$)");
    static const std::regex moves_re(R"(^/sessions/([^/]+)/moves$)");
    static const std::regex hint_re(R"(^/sessions/([^/]+)/hint$)");
    static const std::regex transcript_re(R"(^/transcripts/([^/]+)$)");
    std::smatch m;

    if (method == "POST" && path == "/sessions") return ok(io::to_json(create(parse_body(body))), 201);
    if (method == "GET" && path == "/sessions") return ok(json{{"sessions", sessions_->ids()}});
    if (method == "GET" && std::regex_match(path, m, session_re)) return ok(io::to_json(sessions_->get(m[1])));
    if (method == "POST" && std::regex_match(path, m, moves_re)) {
      const json j = parse_body(body);
      return ok(io::to_json(sessions_->submit_move(m[1], io::interval(j))));
    }
    if (method == "GET" && std::regex_match(path, m, hint_re)) return ok(io::to_json(sessions_->hint_legal(m[1])));
    if (method == "GET" && path == "/transcripts") {
      return ok(json{{"transcripts", store().ids()}});
    }
    if (method == "GET" && std::regex_match(path, m, transcript_re)) {
      return ok(json{{"id", m[1].str()}, {"transcript", json::parse(store().raw(m[1]))}});
    }
    if (method == "POST" && path == "/classify") {
      const json j = parse_body(body);
      const Rational a = io::rational(j.at("alpha")), b = io::rational(j.at("beta"));
      json out = io::to_json(classify(a, b));
      out["alpha"] = a.str();
      out["beta"] = b.str();
      return ok(std::move(out));
    }
    if (method == "POST" && path == "/chain") {
      const json j = parse_body(body);
      return ok(io::to_json(verify_chain(io::rational(j.at("alpha")), io::rational(j.at("beta")))));
    }
    if (method == "POST" && path == "/tree") return ok(tree(parse_body(body)));
    throw Error(ErrorCode::not_found, std::string(method) + " " + path + " is not an endpoint");
  }

  TranscriptStore& store() {
    if (!sessions_->store()) throw Error(ErrorCode::not_found, "this service keeps no transcripts");
    return *sessions_->store();
  }

  SessionView create(const json& j) {
    SessionConfig cfg;
    cfg.variant = io::variant(j.at("variant").get<std::string>(), j.value("parameters", json::object()));
    const std::string human = j.value("human", std::string("none"));
    if (human != "none") cfg.human = parse_player(human);
    cfg.engine_strategy = j.at("engine_strategy").get<std::string>();
    cfg.opponent_strategy = j.value("opponent_strategy", std::string());
    if (j.contains("target")) cfg.target = io::target(j.at("target"));
    cfg.horizon = j.value("horizon", std::size_t{10});
    if (j.contains("b0") && !j.at("b0").is_null()) cfg.b0 = io::interval(j.at("b0"));
    return sessions_->create_session(cfg);
  }

  json tree(const json& j) {
    const GameVariant v = io::variant(j.at("variant").get<std::string>(), j.value("parameters", json::object()));
    v.validate();
    const std::size_t depth = j.at("depth").get<std::size_t>();
    const Player pinned = parse_player(j.value("pinned_player", std::string("alice")));
    TreeOptions opts;
    opts.max_depth = max_tree_depth_;
    if (j.contains("opening")) opts.opening = io::interval(j.at("opening"));
    const Strategy s = make_strategy(j.at("pinned_strategy").get<std::string>(), pinned, StrategyContext{opts.opening, {}});
    const StrategyTree t = build_tree(v, s, parse_brancher(j.value("brancher", std::string("split"))), depth, opts);
    json levels = json::array();
    for (const auto& r : verify_tree(t)) levels.push_back(io::to_json(r));
    json out = io::to_json(t, j.value("fragments", false));
    out["levels"] = std::move(levels);
    return out;
  }

  std::shared_ptr<SessionManager> sessions_;
  std::size_t max_tree_depth_;
};

}  // namespace intergame
