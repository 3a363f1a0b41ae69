#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "intergame/enumeration.hpp"
#include "intergame/rational.hpp"

namespace intergame {

/// The set Alice tries to hit. Membership is only ever asked at rational
/// points (pinned points of certificates).
class TargetDescriptor {
 public:
  enum class Kind { co_singleton, enumeration, predicate };
  using Oracle = std::function<std::optional<bool>(const Rational&)>;

  /// R \ {x}
  static TargetDescriptor co_singleton(Rational x) {
    TargetDescriptor t(Kind::co_singleton);
    t.point_ = std::move(x);
    return t;
  }
  /// The points of a countable dense enumeration.
  static TargetDescriptor enumeration(DenseEnumeration e = DenseEnumeration()) {
    TargetDescriptor t(Kind::enumeration);
    t.enumeration_ = e;
    return t;
  }
  /// Caller-supplied membership test; an empty answer means "cannot decide".
  static TargetDescriptor predicate(std::string name, Oracle oracle) {
    TargetDescriptor t(Kind::predicate);
    t.name_ = std::move(name);
    t.oracle_ = std::move(oracle);
    return t;
  }
  /// Predicate that never decides.
  static TargetDescriptor undecidable() {
    return predicate("undecidable", [](const Rational&) { return std::optional<bool>(); });
  }

  Kind kind() const { return kind_; }
  const Rational& point() const { return point_; }
  const DenseEnumeration& dense_enumeration() const { return enumeration_; }
  const std::string& name() const { return name_; }

  std::optional<bool> decides(const Rational& p) const {
    switch (kind_) {
      case Kind::co_singleton: return p != point_;
      case Kind::enumeration: return enumeration_.contains(p);
      case Kind::predicate: return oracle_ ? oracle_(p) : std::nullopt;
    }
    return std::nullopt;
  }

 private:
  explicit TargetDescriptor(Kind k) : kind_(k) {}

  Kind kind_;
  Rational point_;
  DenseEnumeration enumeration_;
  std::string name_;
  Oracle oracle_;
};

}  // namespace intergame
