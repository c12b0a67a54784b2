#pragma once

#include <algorithm>
#include <vector>

#include "lenscut/curve.hpp"
#include "lenscut/qx_sturm.hpp"

namespace lenscut {

// Exact common points of two coprime curves.
//
// The pair is moved to a sheared frame u = x - t*y in which both polynomials
// have constant leading y-coefficients and no two common points share a
// u-coordinate (checked, retried over a deterministic shear sequence). In
// such a frame the gcd of the two fibers above any root of the resultant has
// degree exactly one, so each common point is (alpha, -s0(alpha)/s1(alpha))
// with s1*y + s0 the first subresultant: a joint representation in the single
// parameter alpha.
inline std::vector<Point2> intersect_curves(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw precondition_error("intersect: zero polynomial");
  if (share_component(f, g)) throw precondition_error("common component");

  for (const Rational& t : detail::shear_candidates()) {
    BiPoly F = sign(t) == 0 ? f : f.shear_x(t);
    BiPoly G = sign(t) == 0 ? g : g.shear_x(t);
    if (F.deg_y() < 1 || G.deg_y() < 1) continue;
    if (F.leading_y_coeff().degree() != 0 || G.leading_y_coeff().degree() != 0) continue;

    UniPoly R = resultant(F, G, Axis::Y);
    if (R.is_zero()) throw verification_error("intersect: resultant of coprime pair vanished");
    if (R.degree() == 0) return {};  // no common complex points at all
    UniPoly Rs = R.square_free_part().normalized_primitive();

    auto [s1, s0] = first_subresultant_y(F, G);
    if (s1.is_zero()) continue;
    if (gcd(Rs, s1).degree() >= 1) continue;  // some fiber gcd has degree >= 2: reshear

    auto inv = invmod(mod_reduce(s1, Rs), Rs);
    if (!inv) continue;
    UniPoly yq = mod_reduce(-Rational(1) * (s0 * (*inv)), Rs);
    UniPoly xq = mod_reduce(UniPoly::identity() + t * yq, Rs);

    std::vector<Point2> out;
    bool all_ok = true;
    for (const auto& alpha : isolate_real_roots(Rs)) {
      Point2 p(JointRep{alpha, xq, yq});
      if (p.sign_of(f) != 0 || p.sign_of(g) != 0) {
        all_ok = false;
        break;
      }
      out.push_back(std::move(p));
    }
    if (!all_ok) continue;
    std::sort(out.begin(), out.end(), [](const Point2& a, const Point2& b) {
      return lex_less(a, b);
    });
    return out;
  }
  throw retry_exhausted_error("intersect: no generic shear found");
}

inline BiPoly jacobian_det(const BiPoly& f, const BiPoly& g) {
  return f.partial_x() * g.partial_y() - f.partial_y() * g.partial_x();
}

inline bool is_smooth_point(const BiPoly& fx, const BiPoly& fy, const Point2& p) {
  return !(p.sign_of(fx) == 0 && p.sign_of(fy) == 0);
}

// Common points plus tangency classification of each.
struct PairIntersection {
  std::vector<Point2> points;          // sorted lexicographically
  std::vector<bool> tangential;       // both curves smooth, Jacobian vanishes
};

inline PairIntersection analyze_pair(const PlaneCurve& c1, const PlaneCurve& c2) {
  PairIntersection out;
  out.points = intersect_curves(c1.f(), c2.f());
  BiPoly J = jacobian_det(c1.f(), c2.f());
  out.tangential.reserve(out.points.size());
  for (const auto& p : out.points) {
    bool tang = p.sign_of(J) == 0 && is_smooth_point(c1.fx(), c1.fy(), p) &&
                is_smooth_point(c2.fx(), c2.fy(), p);
    out.tangential.push_back(tang);
  }
  return out;
}

inline std::vector<Point2> intersect(const PlaneCurve& c1, const PlaneCurve& c2) {
  return intersect_curves(c1.f(), c2.f());
}

// Points where both curves are smooth and meet tangentially.
inline std::vector<Point2> tangency_points(const PlaneCurve& c1, const PlaneCurve& c2) {
  PairIntersection pi = analyze_pair(c1, c2);
  std::vector<Point2> out;
  for (size_t i = 0; i < pi.points.size(); ++i)
    if (pi.tangential[i]) out.push_back(pi.points[i]);
  return out;
}

}  // namespace lenscut
