#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intergame {

enum class ErrorCode {
  parse_error,
  division_by_zero,
  placement_infeasible,
  not_contained,
  bad_parameters,
  illegal_move,
  game_finished,
  empty_history,
  no_legal_reply,
  precondition,
  inapplicable_parameters,
  cannot_split,
  strategy_illegal_move,
  unknown_strategy,
  branch_collision,
  depth_exceeded,
  escape_not_found,
  invariant_violation,
  unknown_word,
  chain_step_failed,
  unknown_session,
  not_your_turn,
  inapplicable_strategy,
  duplicate_id,
  io_error,
  not_found,
};

/// Stable kebab-case identifier used on the wire and in CLI output.
inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::placement_infeasible: return "placement-infeasible";
    case ErrorCode::not_contained: return "not-contained";
    case ErrorCode::bad_parameters: return "bad-parameters";
    case ErrorCode::illegal_move: return "illegal-move";
    case ErrorCode::game_finished: return "game-finished";
    case ErrorCode::empty_history: return "empty-history";
    case ErrorCode::no_legal_reply: return "no-legal-reply";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::inapplicable_parameters: return "inapplicable-parameters";
    case ErrorCode::cannot_split: return "cannot-split";
    case ErrorCode::strategy_illegal_move: return "strategy-produced-illegal-move";
    case ErrorCode::unknown_strategy: return "unknown-strategy";
    case ErrorCode::branch_collision: return "branch-collision";
    case ErrorCode::depth_exceeded: return "depth-exceeded";
    case ErrorCode::escape_not_found: return "escape-not-found";
    case ErrorCode::invariant_violation: return "invariant-violation";
    case ErrorCode::unknown_word: return "unknown-word";
    case ErrorCode::chain_step_failed: return "chain-step-failed";
    case ErrorCode::unknown_session: return "unknown-session";
    case ErrorCode::not_your_turn: return "not-your-turn";
    case ErrorCode::inapplicable_strategy: return "inapplicable-strategy";
    case ErrorCode::duplicate_id: return "duplicate-id";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::not_found: return "not-found";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace intergame
