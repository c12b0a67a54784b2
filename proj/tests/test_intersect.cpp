#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lenscut/intersect.hpp"

using namespace lenscut;

namespace {

BiPoly circle(const Rational& cx, const Rational& cy, const Rational& r2) {
  BiPoly p;
  p.set(2, 0, Rational(1));
  p.set(0, 2, Rational(1));
  p.set(1, 0, -2 * cx);
  p.set(0, 1, -2 * cy);
  p.set(0, 0, cx * cx + cy * cy - r2);
  return p;
}

BiPoly parabola_y_minus_x2() {
  BiPoly p;
  p.set(0, 1, Rational(1));
  p.set(2, 0, Rational(-1));
  return p;
}

}  // namespace

TEST_CASE("circle meets the x-axis") {
  auto pts = intersect_curves(circle(rat(0), rat(0), rat(1)), BiPoly::var_y());
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point2(rat(-1), rat(0)));
  CHECK(pts[1] == Point2(rat(1), rat(0)));
}

TEST_CASE("two overlapping unit circles") {
  // x^2+y^2-1 and (x-1)^2+y^2-1 meet at (1/2, +-sqrt(3)/2)
  auto pts = intersect_curves(circle(rat(0), rat(0), rat(1)), circle(rat(1), rat(0), rat(1)));
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    CHECK(p.x().compare_rational(rat(1, 2)) == 0);
    // y^2 = 3/4
    CHECK(p.y().sign_of(UniPoly({rat(-3, 4), rat(0), rat(1)})) == 0);
  }
  CHECK(compare(pts[0].y(), pts[1].y()) == Order::LT);
}

TEST_CASE("concentric circles are disjoint") {
  CHECK(intersect_curves(circle(rat(0), rat(0), rat(1)), circle(rat(0), rat(0), rat(4))).empty());
}

TEST_CASE("shared component is an error") {
  BiPoly unit = circle(rat(0), rat(0), rat(1));
  BiPoly prod = unit * BiPoly::var_y();
  CHECK_THROWS_AS(intersect_curves(unit, prod), precondition_error);
}

TEST_CASE("vertical line components are handled") {
  // x^2 - 2 = 0 is the pair of vertical lines x = +-sqrt(2)
  BiPoly vlines;
  vlines.set(2, 0, rat(1));
  vlines.set(0, 0, rat(-2));
  auto pts = intersect_curves(vlines, parabola_y_minus_x2());
  REQUIRE(pts.size() == 2);  // (+-sqrt2, 2)
  for (const auto& p : pts) CHECK(p.y().compare_rational(rat(2)) == 0);
  CHECK(compare(pts[0].x(), pts[1].x()) == Order::LT);
}

TEST_CASE("tangency detection") {
  set_degree_cap(4);
  // y - x^2 and y = 0: double contact at the origin
  PlaneCurve par("par", parabola_y_minus_x2());
  PlaneCurve axis("axis", BiPoly::var_y());
  auto tps = tangency_points(par, axis);
  REQUIRE(tps.size() == 1);
  CHECK(tps[0] == Point2(rat(0), rat(0)));

  // internally tangent circles: centers (0,0) and (0,1), radius 1 both
  PlaneCurve c1("c1", circle(rat(0), rat(0), rat(1)));
  PlaneCurve c2("c2", circle(rat(0), rat(1), rat(1)));
  auto pts = intersect(c1, c2);
  REQUIRE(pts.size() == 2);  // (+-sqrt(3)/2, 1/2)
  auto tg = tangency_points(c1, c2);
  CHECK(tg.empty());

  // no intersection at all
  PlaneCurve far("far", circle(rat(10), rat(10), rat(1)));
  CHECK(tangency_points(c1, far).empty());

  // externally tangent circles
  PlaneCurve e1("e1", circle(rat(0), rat(0), rat(1)));
  PlaneCurve e2("e2", circle(rat(2), rat(0), rat(1)));
  auto tg2 = tangency_points(e1, e2);
  REQUIRE(tg2.size() == 1);
  CHECK(tg2[0] == Point2(rat(1), rat(0)));
}

TEST_CASE("Bezout bound on random pairs") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<long> coef(-4, 4);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    BiPoly f, g;
    int df = 1 + static_cast<int>(rng() % 3), dg = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i <= df; ++i)
      for (int j = 0; i + j <= df; ++j) f.set(i, j, rat(coef(rng)));
    for (int i = 0; i <= dg; ++i)
      for (int j = 0; i + j <= dg; ++j) g.set(i, j, rat(coef(rng)));
    if (f.is_zero() || g.is_zero() || f.is_constant() || g.is_constant()) continue;
    if (share_component(f, g)) continue;
    auto pts = intersect_curves(f, g);
    CHECK(static_cast<int>(pts.size()) <= f.total_degree() * g.total_degree());
    for (const auto& p : pts) {
      CHECK(p.sign_of(f) == 0);
      CHECK(p.sign_of(g) == 0);
    }
    // pairwise distinct
    for (size_t i = 0; i + 1 < pts.size(); ++i) CHECK(lex_less(pts[i], pts[i + 1]));
    ++done;
  }
  REQUIRE(done >= 40);
}

TEST_CASE("root windows and ranks at algebraic sites") {
  // circle fiber structure at x = 1/2: two roots y = +-sqrt(3)/2
  BiPoly unit = circle(rat(0), rat(0), rat(1));
  AlgebraicReal half(rat(1, 2));
  XEval at{&half, nullptr};
  ChainCache cache;
  auto w = compute_root_windows(unit, at, &cache);
  REQUIRE(w.count == 2);
  REQUIRE(w.seps.size() == 3);

  // rank of the two intersection points with the shifted circle
  auto pts = intersect_curves(unit, circle(rat(1), rat(0), rat(1)));
  REQUIRE(pts.size() == 2);
  for (int k = 0; k < 2; ++k) {
    const auto* j = pts[k].joint();
    REQUIRE(j != nullptr);
    XEval site{&j->alpha, &j->xq};
    auto wj = compute_root_windows(unit, site, nullptr);
    REQUIRE(wj.count == 2);
    UniPoly ysheared = j->yq + wj.shear_t * j->xq;
    int rank = window_rank(wj, [&](const Rational& s) {
      return j->sign_param(ysheared - UniPoly::constant(s));
    });
    CHECK(rank == k);
  }
}
