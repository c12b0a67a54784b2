#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "lenscut/bipoly.hpp"

namespace lenscut {

// Coordinates of a point given as polynomial expressions in one shared
// algebraic parameter: x = xq(alpha), y = yq(alpha), with xq, yq reduced
// modulo the defining polynomial of alpha. Every exact predicate on such a
// point reduces to the sign of a univariate polynomial at alpha.
struct JointRep {
  AlgebraicReal alpha;
  UniPoly xq, yq;

  // sign of u(x-coordinate-parameter): u composed through nothing, straight at alpha
  int sign_param(const UniPoly& u) const { return alpha.sign_of(u); }

  UniPoly compose(const BiPoly& h) const {
    if (alpha.is_rational()) {
      return UniPoly::constant(h.eval(xq.eval(alpha.rational_value()),
                                      yq.eval(alpha.rational_value())));
    }
    return h.compose_mod(xq, yq, alpha.defining());
  }

  int sign_of(const BiPoly& h) const {
    if (alpha.is_rational())
      return sign(h.eval(xq.eval(alpha.rational_value()), yq.eval(alpha.rational_value())));
    return alpha.sign_of(compose(h));
  }
};

// Turn the element q(alpha) into a standalone algebraic number.
inline AlgebraicReal algebraic_from_element(const UniPoly& q_in, const AlgebraicReal& alpha) {
  if (alpha.is_rational()) return AlgebraicReal(q_in.eval(alpha.rational_value()));
  UniPoly q = mod_reduce(q_in, alpha.defining());
  if (q.is_constant()) return AlgebraicReal(q.is_zero() ? Rational(0) : q.coeff(0));
  UniPoly m = minimal_poly_of_element(q, alpha.defining()).normalized_primitive();
  if (m.degree() == 1) return AlgebraicReal(-m.coeff(0) / m.coeff(1));
  SturmChain sc(m);
  AlgebraicReal a = alpha;  // private refinement copy
  for (;;) {
    QInterval box = q.eval(a.interval());
    bool lo_root = m.sign_at(box.lo) == 0, hi_root = m.sign_at(box.hi) == 0;
    int inside = sc.count_roots(box.lo, box.hi);  // (lo, hi]
    int closed = inside + (lo_root ? 1 : 0);
    if (closed == 1) {
      if (lo_root) return AlgebraicReal(box.lo);
      if (hi_root) return AlgebraicReal(box.hi);
      return AlgebraicReal(m, box.lo, box.hi);
    }
    a.refine_step();
    if (a.is_rational()) return AlgebraicReal(q.eval(a.rational_value()));
  }
}

// Exact plane point. Coordinates are algebraic reals; points produced by the
// intersection machinery also carry a joint representation in one parameter,
// which downstream predicates prefer.
class Point2 {
 public:
  Point2(AlgebraicReal x, AlgebraicReal y) : x_(std::move(x)), y_(std::move(y)) {}

  Point2(const Rational& x, const Rational& y) : x_(AlgebraicReal(x)), y_(AlgebraicReal(y)) {}

  explicit Point2(JointRep joint) : joint_(std::make_shared<JointRep>(std::move(joint))) {}

  const AlgebraicReal& x() const {
    if (!x_) x_ = algebraic_from_element(joint_->xq, joint_->alpha);
    return *x_;
  }
  const AlgebraicReal& y() const {
    if (!y_) y_ = algebraic_from_element(joint_->yq, joint_->alpha);
    return *y_;
  }

  bool is_rational() const { return x().is_rational() && y().is_rational(); }
  const JointRep* joint() const { return joint_ ? joint_.get() : nullptr; }

  // Exact sign of the bivariate polynomial at this point.
  int sign_of(const BiPoly& h) const {
    if (joint_) return joint_->sign_of(h);
    if (x().is_rational() && y().is_rational())
      return sign(h.eval(x().rational_value(), y().rational_value()));
    // independent algebraic coordinates: substitute the rational one, or
    // resolve x first through its defining polynomial
    if (x().is_rational()) {
      UniPoly hy = h.substitute_x(x().rational_value());
      return y().sign_of(hy);
    }
    if (y().is_rational()) {
      UniPoly hx = h.substitute_y(y().rational_value());
      return x().sign_of(hx);
    }
    throw precondition_error(
        "sign query at a point with two independent irrational coordinates requires a joint "
        "representation");
  }

  bool lies_on(const BiPoly& f) const { return sign_of(f) == 0; }

  friend bool operator==(const Point2& a, const Point2& b) {
    return compare(a.x(), b.x()) == Order::EQ && compare(a.y(), b.y()) == Order::EQ;
  }

  // lexicographic (x, then y), exact
  friend bool lex_less(const Point2& a, const Point2& b) {
    Order ox = compare(a.x(), b.x());
    if (ox != Order::EQ) return ox == Order::LT;
    return compare(a.y(), b.y()) == Order::LT;
  }

  std::string to_string() const {
    return "(" + x().to_string() + ", " + y().to_string() + ")";
  }

  double x_double() const { return x().to_double(); }
  double y_double() const { return y().to_double(); }

 private:
  mutable std::optional<AlgebraicReal> x_, y_;
  std::shared_ptr<JointRep> joint_;
};

}  // namespace lenscut
