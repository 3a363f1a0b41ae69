#pragma once

#include <string>

#include "json.hpp"

#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/interval.hpp"
#include "intergame/play.hpp"
#include "intergame/rational.hpp"
#include "intergame/strategy.hpp"
#include "intergame/target.hpp"

// JSON forms of the value types. Rationals always travel as "p/q" strings.
// Objects use nlohmann's sorted keys, so dump() is canonical and
// serialize/parse round-trips byte for byte.

namespace intergame {

using json = nlohmann::json;

namespace io {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string(what) + ": " + e.what());
  }
}

inline Rational rational(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::parse_error, "rational must be a \"p/q\" string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

inline json to_json(const Interval& i) { return json{{"lo", i.lo().str()}, {"hi", i.hi().str()}}; }

inline Interval interval(const json& j) {
  return guarded("interval", [&] { return Interval(rational(j.at("lo")), rational(j.at("hi"))); });
}

inline json to_json(const Move& m) {
  return json{{"player", std::string(to_string(m.player))}, {"lo", m.interval.lo().str()}, {"hi", m.interval.hi().str()}};
}

inline Move move(const json& j) {
  return guarded("move", [&] {
    return Move{parse_player(j.at("player").get<std::string>()), Interval(rational(j.at("lo")), rational(j.at("hi")))};
  });
}

inline json parameters(const GameVariant& v) {
  json p = json::object();
  switch (v.kind) {
    case GameKind::banach_mazur:
      if (v.shrink) p["shrink"] = v.shrink->str();
      break;
    case GameKind::schmidt:
      p["alpha"] = v.alpha.str();
      p["beta"] = v.beta.str();
      break;
    case GameKind::mcmullen:
      p["beta"] = v.beta.str();
      break;
  }
  return p;
}

/// Variant from its tag and a parameter object. A Banach-Mazur game without
/// "shrink" has the shrink rule disabled.
inline GameVariant variant(const std::string& tag, const json& params) {
  return guarded("variant", [&] {
    GameVariant v;
    v.kind = parse_game_kind(tag);
    switch (v.kind) {
      case GameKind::banach_mazur:
        if (params.contains("shrink")) v.shrink = rational(params.at("shrink"));
        break;
      case GameKind::schmidt:
        v.alpha = rational(params.at("alpha"));
        v.beta = rational(params.at("beta"));
        break;
      case GameKind::mcmullen:
        v.beta = rational(params.at("beta"));
        break;
    }
    return v;
  });
}

inline json to_json(const Certificate& c) {
  json j{{"kind", std::string(to_string(c.kind))}};
  if (c.kind == Certificate::Kind::pinned_point) j["point"] = c.point.str();
  if (c.kind == Certificate::Kind::escape_bound) {
    j["displacement"] = c.displacement.str();
    j["threshold"] = c.threshold.str();
  }
  return j;
}

inline Certificate certificate(const json& j) {
  return guarded("certificate", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "none") return Certificate{};
    if (kind == "pinned-point") return Certificate::pinned(rational(j.at("point")));
    if (kind == "escape-bound") return Certificate::escape(rational(j.at("displacement")), rational(j.at("threshold")));
    throw Error(ErrorCode::parse_error, "unknown certificate kind '" + kind + "'");
  });
}

inline json to_json(const TargetDescriptor& t) {
  switch (t.kind()) {
    case TargetDescriptor::Kind::co_singleton: return json{{"kind", "co-singleton"}, {"point", t.point().str()}};
    case TargetDescriptor::Kind::enumeration:
      return json{{"kind", "enumeration"}, {"enumeration", std::string(to_string(t.dense_enumeration().kind()))}};
    case TargetDescriptor::Kind::predicate: return json{{"kind", "predicate"}, {"name", t.name()}};
  }
  return json::object();
}

/// Only the built-in "undecidable" predicate can be named on the wire.
inline TargetDescriptor target(const json& j) {
  return guarded("target", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "co-singleton") return TargetDescriptor::co_singleton(rational(j.at("point")));
    if (kind == "enumeration") {
      return TargetDescriptor::enumeration(
          DenseEnumeration(parse_enumeration(j.value("enumeration", std::string("rationals")))));
    }
    if (kind == "predicate" && j.value("name", std::string()) == "undecidable") return TargetDescriptor::undecidable();
    throw Error(ErrorCode::parse_error, "unsupported target " + j.dump());
  });
}

inline json to_json(const Transcript& t) {
  json moves = json::array();
  for (const auto& m : t.moves) moves.push_back(to_json(m));
  return json{{"variant", std::string(to_string(t.variant.kind))},
              {"parameters", parameters(t.variant)},
              {"moves", std::move(moves)},
              {"horizon", t.horizon},
              {"verdict", std::string(to_string(t.verdict))},
              {"certificate", to_json(t.certificate)},
              {"bracket", to_json(t.bracket)}};
}

inline Transcript transcript(const json& j) {
  return guarded("transcript", [&] {
    Transcript t;
    t.variant = variant(j.at("variant").get<std::string>(), j.at("parameters"));
    for (const auto& m : j.at("moves")) t.moves.push_back(move(m));
    t.horizon = j.at("horizon").get<std::size_t>();
    t.verdict = parse_verdict(j.at("verdict").get<std::string>());
    t.certificate = certificate(j.at("certificate"));
    t.bracket = interval(j.at("bracket"));
    return t;
  });
}

}  // namespace io

/// Canonical one-line text of a transcript.
inline std::string serialize(const Transcript& t) { return io::to_json(t).dump(); }

inline Transcript parse_transcript(const std::string& text) {
  return io::guarded("transcript", [&] { return io::transcript(json::parse(text)); });
}

}  // namespace intergame
