#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "intergame/error.hpp"
#include "intergame/rational.hpp"
#include "intergame/serialize.hpp"
#include "intergame/strategy.hpp"

namespace intergame {

enum class Regime { bob_trivial, alice_trivial, nondeterminacy, out_of_range };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::bob_trivial: return "bob-trivial";
    case Regime::alice_trivial: return "alice-trivial";
    case Regime::nondeterminacy: return "nondeterminacy";
    case Regime::out_of_range: return "out-of-range";
  }
  return "?";
}

/// Classification of a Schmidt parameter pair with the exact margins that
/// decide it. Margins are only meaningful for in-range pairs.
struct RegimeVerdict {
  Regime regime = Regime::out_of_range;
  Rational beta_margin;    // beta - (2 - 1/alpha); <= 0 means Bob can pin a point
  Rational alpha_margin;   // alpha - (2 - 1/beta); <= 0 means Alice can pin a point
  Rational escape_margin;  // (1-beta)alpha/(1-alpha beta) - (beta - 1/2)
};

inline RegimeVerdict classify(const Rational& alpha, const Rational& beta) {
  RegimeVerdict out;
  const bool in_range = alpha.sign() > 0 && alpha < 1 && beta.sign() > 0 && beta < 1;
  if (!in_range) return out;
  out.beta_margin = beta - (Rational(2) - Rational(1) / alpha);
  out.alpha_margin = alpha - (Rational(2) - Rational(1) / beta);
  out.escape_margin = displacement_closed_form(alpha, beta) - (beta - Rational(1, 2));
  // Both margins <= 0 would force (1 - alpha)(1 - beta) <= 0, impossible here.
  if (out.beta_margin.sign() <= 0) {
    out.regime = Regime::bob_trivial;
  } else if (out.alpha_margin.sign() <= 0) {
    out.regime = Regime::alice_trivial;
  } else {
    out.regime = Regime::nondeterminacy;
  }
  return out;
}

inline bool mcmullen_param_ok(const Rational& beta) { return beta.sign() > 0 && beta < Rational(1, 3); }

struct ChainStep {
  std::string name;
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Every inequality of the escape-bound derivation evaluated exactly, with
/// all intermediate values kept so the report doubles as a certificate.
struct ChainReport {
  Rational alpha;
  Rational beta;
  std::vector<ChainStep> steps;
  Rational closed_form;
  Rational conclusion_margin;  // closed_form - (beta - 1/2)

  bool all_hold() const {
    for (const auto& s : steps) {
      if (!s.holds) return false;
    }
    return true;
  }
};

namespace detail {

enum class Rel { less, greater, equal };

inline ChainStep step(std::string name, std::string statement, Rational lhs, Rational rhs, Rel rel) {
  bool holds = false;
  switch (rel) {
    case Rel::less: holds = lhs < rhs; break;
    case Rel::greater: holds = lhs > rhs; break;
    case Rel::equal: holds = lhs == rhs; break;
  }
  return ChainStep{std::move(name), std::move(statement), std::move(lhs), std::move(rhs), holds};
}

}  // namespace detail

inline ChainReport evaluate_chain(const Rational& alpha, const Rational& beta) {
  using detail::Rel;
  using detail::step;
  const Rational one(1), two(2), half(1, 2);
  const Rational ab = alpha * beta;
  const Rational closed = displacement_closed_form(alpha, beta);
  const Rational printed_bound = (one - beta) * ab / (two - two * beta);
  const Rational direct_bound = (one - beta) * alpha / (two - two * beta);

  ChainReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.closed_form = closed;
  r.conclusion_margin = closed - (beta - half);
  r.steps = {
      step("i", "alpha*beta > 2*beta - 1", ab, two * beta - one, Rel::greater),
      step("ii", "1 - alpha*beta < 2 - 2*beta", one - ab, two - two * beta, Rel::less),
      step("iii-printed", "(1-beta)alpha/(1-alpha*beta) > (1-beta)alpha*beta/(2-2*beta)", closed, printed_bound,
           Rel::greater),
      step("iii-printed-eq", "(1-beta)alpha*beta/(2-2*beta) = alpha*beta/2", printed_bound, ab / two, Rel::equal),
      step("iii-direct", "(1-beta)alpha/(1-alpha*beta) > (1-beta)alpha/(2-2*beta)", closed, direct_bound,
           Rel::greater),
      step("iii-direct-dominates", "(1-beta)alpha/(2-2*beta) > (1-beta)alpha*beta/(2-2*beta)", direct_bound,
           printed_bound, Rel::greater),
      step("iii", "(1-beta)alpha/(1-alpha*beta) > alpha*beta/2", closed, ab / two, Rel::greater),
      step("iv", "alpha*beta/2 > beta - 1/2", ab / two, beta - half, Rel::greater),
      step("conclusion", "(1-beta)alpha/(1-alpha*beta) > beta - 1/2", closed, beta - half, Rel::greater),
      step("conclusion-scaled", "beta(1-beta)alpha/(1-alpha*beta) > beta - 1/2", beta * closed, beta - half,
           Rel::greater),
  };
  return r;
}

/// The chain for a pair in the nondeterminacy regime. Any failing step is a
/// defect in this code, reported as chain-step-failed.
inline ChainReport verify_chain(const Rational& alpha, const Rational& beta) {
  if (classify(alpha, beta).regime != Regime::nondeterminacy) {
    throw Error(ErrorCode::precondition,
                "alpha=" + alpha.str() + ", beta=" + beta.str() + " is not in the nondeterminacy regime");
  }
  ChainReport r = evaluate_chain(alpha, beta);
  for (const auto& s : r.steps) {
    if (!s.holds) throw Error(ErrorCode::chain_step_failed, "step " + s.name + ": " + s.statement);
  }
  return r;
}

namespace io {

inline json to_json(const RegimeVerdict& v) {
  json j{{"regime", std::string(to_string(v.regime))}};
  if (v.regime != Regime::out_of_range) {
    j["margins"] = json{{"beta_minus_2_minus_inv_alpha", v.beta_margin.str()},
                        {"alpha_minus_2_minus_inv_beta", v.alpha_margin.str()},
                        {"closed_form_minus_threshold", v.escape_margin.str()}};
  }
  return j;
}

inline json to_json(const ChainReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back(json{{"name", s.name}, {"statement", s.statement}, {"lhs", s.lhs.str()}, {"rhs", s.rhs.str()},
                         {"holds", s.holds}});
  }
  return json{{"alpha", r.alpha.str()},
              {"beta", r.beta.str()},
              {"closed_form", r.closed_form.str()},
              {"conclusion_margin", r.conclusion_margin.str()},
              {"steps", std::move(steps)}};
}

}  // namespace io

/// Rows "alpha,beta,regime,beta_margin,alpha_margin,escape_margin" for every
/// pair p/q in (0,1) with q <= max_den. Suitable for plotting the regime plane.
inline std::string regime_table(unsigned max_den) {
  std::vector<Rational> grid;
  for (long q = 2; q <= static_cast<long>(max_den); ++q) {
    for (long p = 1; p < q; ++p) {
      const Rational r(p, q);
      if (r.den() == q) grid.push_back(r);
    }
  }
  std::sort(grid.begin(), grid.end());
  std::ostringstream out;
  out << "alpha,beta,regime,beta_margin,alpha_margin,escape_margin\n";
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      const auto v = classify(a, b);
      out << a << ',' << b << ',' << to_string(v.regime) << ',' << v.beta_margin << ',' << v.alpha_margin << ','
          << v.escape_margin << '\n';
    }
  }
  return out.str();
}

}  // namespace intergame
