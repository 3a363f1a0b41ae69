#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/strategy.hpp"
#include "intergame/target.hpp"

namespace intergame {

/// What a named strategy may need to know to instantiate itself.
struct StrategyContext {
  std::optional<Interval> opening;  // Bob's B_0 if fixed in advance
  std::optional<TargetDescriptor> target;
};

inline const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names = {
      "bob-center-pin",         "alice-dense-pin",  "bob-endpoint-pin-left", "bob-endpoint-pin-right",
      "alice-endpoint-pin-left", "alice-endpoint-pin-right", "split-thirds", "align-left",
      "align-right",            "random-legal:<seed>"};
  return names;
}

/// Strategy from its stable identifier. Side-agnostic strategies are
/// attached to `owner`; side-specific ones must match it.
///
/// "bob-center-pin" pins the center of the fixed opening if there is one,
/// else the point given as "bob-center-pin:<p/q>" (default 0).
inline Strategy make_strategy(std::string_view name, Player owner, const StrategyContext& ctx = {}) {
  auto require = [&](Player p) {
    if (p != owner) {
      throw Error(ErrorCode::inapplicable_strategy,
                  "'" + std::string(name) + "' cannot play for " + std::string(to_string(owner)));
    }
  };
  auto suffix = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = name.substr(prefix.size());
    if (rest.empty()) return std::string_view();
    if (rest.front() != ':') return std::nullopt;
    return rest.substr(1);
  };

  if (auto arg = suffix("bob-center-pin")) {
    require(Player::bob);
    if (ctx.opening) return bob_center_pin(ctx.opening->center(), ctx.opening->length());
    return bob_center_pin(arg->empty() ? Rational(0) : Rational::parse(*arg));
  }
  if (name == "alice-dense-pin") {
    require(Player::alice);
    if (ctx.target && ctx.target->kind() == TargetDescriptor::Kind::enumeration) {
      return alice_dense_pin(ctx.target->dense_enumeration());
    }
    return alice_dense_pin();
  }
  for (Player p : {Player::bob, Player::alice}) {
    const std::string base = std::string(to_string(p)) + "-endpoint-pin-";
    if (name == base + "left" || name == base + "right") {
      require(p);
      return endpoint_pin(p, name.ends_with("right") ? Placement::right : Placement::left);
    }
  }
  if (name == "split-thirds") return split_thirds(owner);
  if (name == "align-left") return aligned(owner, Placement::left);
  if (name == "align-right") return aligned(owner, Placement::right);
  if (auto arg = suffix("random-legal")) {
    std::uint64_t seed = 0;
    if (!arg->empty()) {
      try {
        seed = std::stoull(std::string(*arg));
      } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "bad seed in '" + std::string(name) + "'");
      }
    }
    return random_legal(owner, seed);
  }
  throw Error(ErrorCode::unknown_strategy, "no strategy named '" + std::string(name) + "'");
}

}  // namespace intergame
