#pragma once

#include <string>
#include <string_view>

#include "intergame/error.hpp"
#include "intergame/interval.hpp"
#include "intergame/rational.hpp"

namespace intergame {

// Enumerations of countable dense subsets of the line. An enumeration lists
// its points level by level (finitely many per level, left to right), so the
// first enumerated point in a band is the leftmost point of the shallowest
// level meeting the band. Both kinds below compute it without enumerating.

namespace detail {

// Shallowest node of the positive Stern-Brocot tree inside [a, b], 0 < a <= b.
// Runs of equal turns are taken in one step so far-away bands stay cheap.
inline Rational stern_brocot_simplest_positive(const Rational& a, const Rational& b) {
  mpz_class lp = 0, lq = 1;  // left bound  lp/lq
  mpz_class rp = 1, rq = 0;  // right bound rp/rq (1/0 = infinity)
  for (;;) {
    const Rational m(lp + rp, lq + rq);
    if (m < a) {
      // Right turns produce (lp + k rp)/(lq + k rq); take the smallest k reaching a.
      const Rational k_exact = (a * Rational(lq) - Rational(lp)) / (Rational(rp) - a * Rational(rq));
      mpz_class k = k_exact.ceil();
      if (k < 1) k = 1;
      lp += (k - 1) * rp;
      lq += (k - 1) * rq;
      // Node k: either inside the band or past it on the right.
      const Rational node(lp + rp, lq + rq);
      if (node <= b) return node;
      rp = lp + rp;
      rq = lq + rq;
    } else if (m > b) {
      // Left turns produce (k lp + rp)/(k lq + rq); smallest k with node <= b.
      const Rational k_exact = (Rational(rp) - b * Rational(rq)) / (b * Rational(lq) - Rational(lp));
      mpz_class k = k_exact.ceil();
      if (k < 1) k = 1;
      rp += (k - 1) * lp;
      rq += (k - 1) * lq;
      const Rational node(lp + rp, lq + rq);
      if (node >= a) return node;
      lp = lp + rp;
      lq = lq + rq;
    } else {
      return m;
    }
  }
}

}  // namespace detail

/// The rational in `band` that comes first in the breadth-first order of the
/// Stern-Brocot tree extended to all of Q (root 0, negatives mirrored).
inline Rational stern_brocot_first_in(const Interval& band) {
  const Rational& a = band.lo();
  const Rational& b = band.hi();
  if (a.sign() <= 0 && b.sign() >= 0) return Rational(0);
  if (a.sign() > 0) return detail::stern_brocot_simplest_positive(a, b);
  return -detail::stern_brocot_simplest_positive(-b, -a);
}

/// Depth of r in the extended Stern-Brocot tree (0 at the root). Used by
/// tests as an independent ordering oracle.
inline unsigned long stern_brocot_depth(const Rational& r) {
  if (r.is_zero()) return 0;
  // Sum of continued-fraction partial quotients of |r|.
  mpz_class p = abs(r).num(), q = abs(r).den();
  mpz_class total = 0;
  while (q != 0) {
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    total += t;
    mpz_class rem = p - t * q;
    p = q;
    q = rem;
  }
  return total.get_ui();
}

/// First dyadic rational in `band` when level n lists m/2^n with |m/2^n| <= n
/// (excluding earlier levels) in increasing order.
inline Rational dyadic_first_in(const Interval& band) {
  if (band.degenerate()) {
    const mpz_class& d = band.lo().den();
    if ((d & (d - 1)) != 0) {
      throw Error(ErrorCode::precondition, "degenerate band " + to_string(band) + " holds no dyadic point");
    }
  }
  mpz_class scale = 1;
  for (long n = 0;; ++n, scale *= 2) {
    const Rational lo = max(band.lo(), Rational(-n));
    const Rational hi = min(band.hi(), Rational(n));
    if (hi < lo) continue;
    const Rational candidate((lo * Rational(scale)).ceil(), scale);
    if (candidate <= hi) return candidate;
  }
}

enum class EnumerationKind { rationals, dyadic };

inline std::string_view to_string(EnumerationKind k) { return k == EnumerationKind::rationals ? "rationals" : "dyadic"; }

inline EnumerationKind parse_enumeration(std::string_view s) {
  if (s == "rationals") return EnumerationKind::rationals;
  if (s == "dyadic") return EnumerationKind::dyadic;
  throw Error(ErrorCode::parse_error, "unknown enumeration '" + std::string(s) + "'");
}

/// A fixed enumeration of a countable dense set.
class DenseEnumeration {
 public:
  explicit DenseEnumeration(EnumerationKind kind = EnumerationKind::rationals) : kind_(kind) {}

  EnumerationKind kind() const { return kind_; }

  bool contains(const Rational& r) const {
    if (kind_ == EnumerationKind::rationals) return true;
    const mpz_class& d = r.den();
    return (d & (d - 1)) == 0;
  }

  Rational first_in(const Interval& band) const {
    return kind_ == EnumerationKind::rationals ? stern_brocot_first_in(band) : dyadic_first_in(band);
  }

  friend bool operator==(const DenseEnumeration&, const DenseEnumeration&) = default;

 private:
  EnumerationKind kind_;
};

}  // namespace intergame
