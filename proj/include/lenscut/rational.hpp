#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "lenscut/errors.hpp"

namespace lenscut {

// Exact rational scalar. mpq_class keeps the invariants we need: always
// canonicalized (gcd(|num|,den)=1) and denominator > 0.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Serializes as "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw precondition_error("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw precondition_error("bad rational literal: " + s);
  q.canonicalize();
  if (q.get_den() == 0) throw precondition_error("zero denominator: " + s);
  return q;
}

inline double rat_to_double(const Rational& q) { return q.get_d(); }

// Closed rational interval [lo, hi] with outward-monotone arithmetic.
// Used for certified evaluation of polynomials at algebraic arguments.
struct QInterval {
  Rational lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rational v) : lo(v), hi(v) {}
  QInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}

  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }

  // Sign when certain, 0 when the interval straddles zero.
  int certain_sign() const {
    if (sign(lo) > 0) return 1;
    if (sign(hi) < 0) return -1;
    return 0;
  }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline QInterval operator-(const QInterval& a, const QInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline QInterval operator*(const Rational& c, const QInterval& a) {
  if (sign(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

inline QInterval operator+(const QInterval& a, const Rational& c) {
  return {a.lo + c, a.hi + c};
}

}  // namespace lenscut
