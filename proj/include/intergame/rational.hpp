#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "intergame/error.hpp"

namespace intergame {

/// Exact signed fraction, always in lowest terms with a positive denominator.
///
/// The textual form "p/q" is the only representation that crosses process
/// boundaries. `str()` always emits the denominator ("5/1"); `parse` also
/// accepts a bare integer ("5") and non-reduced input, which it normalizes.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : q_(mpz_class(std::to_string(value))) {}  // NOLINT
  explicit Rational(const mpz_class& value) : q_(value) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
      throw Error(ErrorCode::division_by_zero, "zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  static Rational parse(std::string_view text) {
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
      throw Error(ErrorCode::parse_error, "not a rational: '" + std::string(text) + "'");
    }
    return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  std::string str() const { return num().get_str() + "/" + den().get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  mpz_class floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return out;
  }
  mpz_class ceil() const {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return out;
  }

  /// Lossy; for display and plotting only.
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational out;
    out.q_ = -a.q_;
    return out;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational pow(Rational base, unsigned exponent) {
  Rational out(1);
  while (exponent != 0) {
    if (exponent & 1u) out *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return out;
}

inline Rational operator""_q(const char* text, std::size_t len) {
  return Rational::parse(std::string_view(text, len));
}

}  // namespace intergame
