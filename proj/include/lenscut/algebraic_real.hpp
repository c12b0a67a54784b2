#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenscut/unipoly.hpp"

namespace lenscut {

enum class Order { LT = -1, EQ = 0, GT = 1 };

// Simplest rational (Stern-Brocot) in the closed interval [a, b].
inline Rational simplest_rational_closed(const Rational& a, const Rational& b) {
  if (a > b) return simplest_rational_closed(b, a);
  if (sign(a) <= 0 && sign(b) >= 0) return Rational(0);
  if (sign(a) < 0) return -simplest_rational_closed(-b, -a);
  mpz_class ai = a.get_num() / a.get_den();  // floor for positive a
  Rational fa(ai);
  Rational ca = (fa == a) ? a : Rational(ai + 1);
  if (ca <= b) return ca;
  // a and b share the same integer part
  return fa + Rational(1) / simplest_rational_closed(Rational(1) / (b - fa), Rational(1) / (a - fa));
}

// Simple rational strictly inside (a, b).
inline Rational rational_strictly_between(const Rational& a, const Rational& b) {
  Rational lo = a + (b - a) / 4;
  Rational hi = b - (b - a) / 4;
  return simplest_rational_closed(lo, hi);
}

// Real algebraic number: square-free defining polynomial plus an isolating
// rational interval. Rational values collapse to lo == hi with a linear
// defining polynomial. Invariants for irrational values:
//   defining(lo) != 0, defining(hi) != 0, sign change across (lo, hi),
//   exactly one real root of defining in (lo, hi).
// The interval refines lazily; instances are value types and each copy
// refines independently (keep instances thread-local).
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}

  explicit AlgebraicReal(Rational v)
      : defining_(UniPoly::linear_root(v)), lo_(v), hi_(v) {}

  // Caller guarantees: p square-free with exactly one root in (lo, hi) and
  // nonzero values at the endpoints.
  AlgebraicReal(UniPoly p, Rational lo, Rational hi)
      : defining_(p.normalized_primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ == hi_) {
      defining_ = UniPoly::linear_root(lo_);
      return;
    }
    sign_lo_ = defining_.sign_at(lo_);
  }

  bool is_rational() const { return lo_ == hi_; }
  const Rational& rational_value() const { return lo_; }
  const UniPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  QInterval interval() const { return {lo_, hi_}; }

  void refine_step() const {
    if (is_rational()) return;
    Rational mid = (lo_ + hi_) / 2;
    int sm = defining_.sign_at(mid);
    if (sm == 0) {
      lo_ = hi_ = mid;
      defining_ = UniPoly::linear_root(mid);
      return;
    }
    if (sm == sign_lo_) lo_ = mid;
    else hi_ = mid;
  }

  void refine_below_width(const Rational& w) const {
    while (!is_rational() && hi_ - lo_ >= w) refine_step();
  }

  double to_double() const {
    AlgebraicReal copy = *this;
    while (!copy.is_rational() && rat_to_double(copy.hi_) != rat_to_double(copy.lo_))
      copy.refine_step();
    return rat_to_double((copy.lo_ + copy.hi_) / 2);
  }

  // Exact sign of this - v.
  int compare_rational(const Rational& v) const {
    if (is_rational()) return sign(lo_ - v);
    for (;;) {
      // endpoints are never roots, so the value lies strictly inside (lo, hi)
      if (v <= lo_) return 1;
      if (v >= hi_) return -1;
      // lo < v < hi: root iff defining(v) == 0
      if (defining_.sign_at(v) == 0) return 0;
      // shrink the interval to one side of v
      if (defining_.sign_at(v) == sign_lo_) lo_ = v;
      else hi_ = v;
      if (lo_ == hi_) return sign(lo_ - v);
    }
  }

  // Exact sign of q at this number; q may vanish here.
  int sign_of(const UniPoly& q) const {
    if (q.is_zero()) return 0;
    if (is_rational()) return q.sign_at(lo_);
    UniPoly g = gcd(defining_, q);
    if (g.degree() >= 1) {
      // roots of g are common roots of defining and q; the only root of
      // defining in our interval is this number
      SturmChain sc(g);
      if (sc.count_roots(lo_, hi_) >= 1) return 0;
    }
    for (int guard = 0;; ++guard) {
      if (guard > 4000)
        throw verification_error("sign_of: runaway refinement at " + to_string() + " for " +
                                 q.to_string());
      int s = q.eval(interval()).certain_sign();
      if (s != 0) return s;
      refine_step();
      if (is_rational()) return q.sign_at(lo_);
    }
  }

  friend Order compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational()) {
      int s = b.compare_rational(a.lo_);
      return s < 0 ? Order::GT : (s > 0 ? Order::LT : Order::EQ);
    }
    if (b.is_rational()) {
      int s = a.compare_rational(b.lo_);
      return s < 0 ? Order::LT : (s > 0 ? Order::GT : Order::EQ);
    }
    // irrational values are strictly interior, so touching intervals decide too
    if (a.hi_ <= b.lo_) return Order::LT;
    if (b.hi_ <= a.lo_) return Order::GT;

    UniPoly g = gcd(a.defining_, b.defining_);
    bool a_common = false, b_common = false;
    if (g.degree() >= 1) {
      SturmChain sc(g);
      a_common = sc.count_roots(a.lo_, a.hi_) >= 1;
      b_common = sc.count_roots(b.lo_, b.hi_) >= 1;
      if (a_common && b_common) {
        Rational mlo = std::min(a.lo_, b.lo_), mhi = std::max(a.hi_, b.hi_);
        if (sc.count_roots(mlo, mhi) == 1) return Order::EQ;
      }
    }
    // distinct numbers: refine until the intervals separate
    for (int guard = 0;; ++guard) {
      if (guard > 4000)
        throw verification_error("compare: runaway refinement between " + a.to_string() +
                                 " and " + b.to_string());
      a.refine_step();
      b.refine_step();
      if (a.is_rational() && b.is_rational())
        return a.lo_ < b.lo_ ? Order::LT : (a.lo_ > b.lo_ ? Order::GT : Order::EQ);
      if (a.is_rational()) {
        int s = b.compare_rational(a.lo_);
        return s < 0 ? Order::GT : (s > 0 ? Order::LT : Order::EQ);
      }
      if (b.is_rational()) {
        int s = a.compare_rational(b.lo_);
        return s < 0 ? Order::LT : (s > 0 ? Order::GT : Order::EQ);
      }
      if (a.hi_ <= b.lo_) return Order::LT;
      if (b.hi_ <= a.lo_) return Order::GT;
    }
  }

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == Order::EQ;
  }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == Order::LT;
  }
  friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) != Order::GT;
  }
  friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == Order::GT;
  }
  friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) != Order::LT;
  }

  std::string to_string() const {
    if (is_rational()) return rat_to_string(lo_);
    return "root of " + defining_.to_string() + " in (" + rat_to_string(lo_) + ", " +
           rat_to_string(hi_) + ")";
  }

 private:
  mutable UniPoly defining_;
  mutable Rational lo_, hi_;
  mutable int sign_lo_ = 0;
};

// Rational strictly between two distinct algebraic numbers a < b.
inline Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal x = a, y = b;
  int guard = 0;
  while (!(x.hi() < y.lo())) {
    if (x.is_rational() && y.is_rational()) break;
    if (++guard > 4000)
      throw verification_error("rational_between: arguments not separated: " + a.to_string() +
                               " vs " + b.to_string());
    x.refine_step();
    y.refine_step();
  }
  if (x.hi() < y.lo()) return rational_strictly_between(x.hi(), y.lo());
  // both rational now
  return rational_strictly_between(x.lo(), y.lo());
}

// ---- real root isolation (Descartes / VCA bisection) ----

namespace detail {

// Descartes bound for the number of roots of p in the open interval (a, b):
// sign variations of (1+x)^n * p((a + b*x)/(1+x)) expanded around x -> x+1.
inline int descartes_bound(const UniPoly& p, const Rational& a, const Rational& b) {
  UniPoly q = p.compose_affine(b - a, a);  // maps (0,1) onto (a,b)
  UniPoly r = q.reversed().compose_affine(Rational(1), Rational(1));
  int var = 0, prev = 0;
  for (const auto& cv : r.coeffs()) {
    int s = sign(cv);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace detail

// Distinct real roots of p in increasing order, as isolated algebraic numbers.
// Multiplicities are discarded (square-free part is taken internally).
inline std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p_in) {
  if (p_in.is_zero())
    throw precondition_error("zero polynomial has no isolated roots");
  if (p_in.degree() == 0) return {};
  UniPoly p = p_in.square_free_part().normalized_primitive();
  if (p.degree() == 1) {
    return {AlgebraicReal(-p.coeff(0) / p.coeff(1))};
  }

  // strict Cauchy bound: all real roots lie in (-B, B)
  Rational maxc(0);
  for (int i = 0; i < p.degree(); ++i) maxc = std::max(maxc, rat_abs(p.coeff(i)));
  Rational B = Rational(1) + maxc / rat_abs(p.leading());

  std::vector<AlgebraicReal> out;
  struct Seg {
    Rational a, b;
  };
  std::vector<Seg> stack{{-B, B}};
  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<Rational> exact;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int v = detail::descartes_bound(p, s.a, s.b);
    if (v == 0) continue;
    if (v == 1) {
      isolated.emplace_back(s.a, s.b);
      continue;
    }
    Rational m = (s.a + s.b) / 2;
    if (p.sign_at(m) == 0) exact.push_back(m);
    stack.push_back({m, s.b});
    stack.push_back({s.a, m});
  }
  for (auto& [a, b] : isolated) out.emplace_back(p, a, b);
  for (auto& r : exact) out.emplace_back(r);
  std::sort(out.begin(), out.end(),
            [](const AlgebraicReal& x, const AlgebraicReal& y) { return x < y; });
  return out;
}

// Number of distinct real roots of p in the open interval (a, b), a, b not roots.
inline int count_real_roots_between(const UniPoly& p, const Rational& a, const Rational& b) {
  SturmChain sc(p);
  return sc.count_roots(a, b);
}

}  // namespace lenscut
