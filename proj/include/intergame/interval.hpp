#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "intergame/error.hpp"
#include "intergame/rational.hpp"

namespace intergame {

/// Closed interval [lo, hi] over an exact ordered field. Degenerate intervals
/// (lo == hi) are representable; whether one is acceptable is up to the caller.
template <typename T>
class BasicInterval {
 public:
  using value_type = T;

  BasicInterval() = default;
  BasicInterval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) {
      throw Error(ErrorCode::bad_parameters, "interval with lo > hi");
    }
  }

  const T& lo() const { return lo_; }
  const T& hi() const { return hi_; }
  T length() const { return hi_ - lo_; }
  T center() const { return (lo_ + hi_) / T(2); }
  bool degenerate() const { return lo_ == hi_; }

  bool contains(const T& point) const { return lo_ <= point && point <= hi_; }
  /// Closed containment; shared endpoints are allowed.
  bool contains(const BasicInterval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

  /// True when the closed intervals share no point (touching counts as meeting).
  bool disjoint(const BasicInterval& other) const { return hi_ < other.lo_ || other.hi_ < lo_; }
  bool strictly_left_of(const T& point) const { return hi_ < point; }
  bool strictly_right_of(const T& point) const { return lo_ > point; }

  BasicInterval shifted(const T& by) const { return BasicInterval(lo_ + by, hi_ + by); }

  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicInterval& i) {
    return os << '[' << i.lo_ << ", " << i.hi_ << ']';
  }

 private:
  T lo_{};
  T hi_{};
};

using Interval = BasicInterval<Rational>;

inline std::string to_string(const Interval& i) { return "[" + i.lo().str() + ", " + i.hi().str() + "]"; }

template <typename T>
T length(const BasicInterval<T>& i) {
  return i.length();
}

template <typename T>
bool contains(const BasicInterval<T>& outer, const BasicInterval<T>& inner) {
  return outer.contains(inner);
}

namespace anchor {
struct Left {};
struct Right {};
struct Centered {
  Rational point;
};
/// Left endpoint at host.lo + offset.
struct Offset {
  Rational offset;
};
}  // namespace anchor

using AnchorSpec = std::variant<anchor::Left, anchor::Right, anchor::Centered, anchor::Offset>;

/// Subinterval of `host` with exactly length `len` placed according to `how`.
inline Interval place_subinterval(const Interval& host, const Rational& len, const AnchorSpec& how) {
  if (len.sign() <= 0 || len > host.length()) {
    throw Error(ErrorCode::placement_infeasible,
                "length " + len.str() + " does not fit host " + to_string(host));
  }
  Rational lo;
  if (std::holds_alternative<anchor::Left>(how)) {
    lo = host.lo();
  } else if (std::holds_alternative<anchor::Right>(how)) {
    lo = host.hi() - len;
  } else if (const auto* c = std::get_if<anchor::Centered>(&how)) {
    lo = c->point - len / 2;
  } else {
    const auto& t = std::get<anchor::Offset>(how).offset;
    if (t.sign() < 0 || t > host.length() - len) {
      throw Error(ErrorCode::placement_infeasible,
                  "offset " + t.str() + " outside [0, " + (host.length() - len).str() + "]");
    }
    lo = host.lo() + t;
  }
  Interval out(lo, lo + len);
  if (!host.contains(out)) {
    throw Error(ErrorCode::placement_infeasible,
                to_string(out) + " does not fit inside " + to_string(host));
  }
  return out;
}

/// Closure of outer \ removed as 0, 1 or 2 closed pieces, left to right.
/// A shared endpoint leaves an empty difference on that side, so no piece
/// is emitted for it.
inline std::vector<Interval> gap_components(const Interval& outer, const Interval& removed) {
  if (!outer.contains(removed)) {
    throw Error(ErrorCode::not_contained,
                to_string(removed) + " is not inside " + to_string(outer));
  }
  std::vector<Interval> out;
  if (outer.lo() < removed.lo()) out.emplace_back(outer.lo(), removed.lo());
  if (removed.hi() < outer.hi()) out.emplace_back(removed.hi(), outer.hi());
  return out;
}

}  // namespace intergame
