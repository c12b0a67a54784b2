#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lenscut/algebraic_real.hpp"
#include "lenscut/bipoly.hpp"
#include "lenscut/unipoly.hpp"

using namespace lenscut;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

BiPoly circle(const Rational& cx, const Rational& cy, const Rational& r2) {
  // (x-cx)^2 + (y-cy)^2 - r2
  BiPoly p;
  p.set(2, 0, Rational(1));
  p.set(0, 2, Rational(1));
  p.set(1, 0, -2 * cx);
  p.set(0, 1, -2 * cy);
  p.set(0, 0, cx * cx + cy * cy - r2);
  return p;
}

}  // namespace

TEST_CASE("unipoly arithmetic and division") {
  UniPoly p = upoly({1, 0, 1});       // x^2 + 1
  UniPoly q = upoly({-1, 1});         // x - 1
  auto [quo, rem] = divrem(p, q);
  CHECK(quo == upoly({1, 1}));
  CHECK(rem == upoly({2}));
  CHECK(p.eval(rat(2)) == rat(5));
  CHECK((p * q).degree() == 3);
  CHECK(gcd(upoly({-1, 0, 1}), upoly({1, 1})) == upoly({1, 1}));  // x+1 divides x^2-1
}

TEST_CASE("isolate_real_roots on the fixed examples") {
  // x^2 - 1 -> {-1, +1}
  auto roots = isolate_real_roots(upoly({-1, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].compare_rational(rat(-1)) == 0);
  CHECK(roots[1].compare_rational(rat(1)) == 0);

  // x^2 + 1 -> {}
  CHECK(isolate_real_roots(upoly({1, 0, 1})).empty());

  // 2x^3 - 3x^2 + 1 = (x-1)^2 (2x+1) -> distinct roots {-1/2, 1}
  auto r2 = isolate_real_roots(upoly({1, 0, -3, 2}));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].compare_rational(rat(-1, 2)) == 0);
  CHECK(r2[1].compare_rational(rat(1)) == 0);

  CHECK_THROWS_AS(isolate_real_roots(UniPoly()), precondition_error);
}

TEST_CASE("root isolation round-trip on random rational-root products") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 1 + static_cast<int>(rng() % 6);
    std::vector<Rational> roots;
    UniPoly p = UniPoly::constant(rat(1));
    for (int i = 0; i < k; ++i) {
      Rational r = rat(num(rng), den(rng));
      roots.push_back(r);
      p = p * UniPoly::linear_root(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto found = isolate_real_roots(p);
    REQUIRE(found.size() == roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
      CHECK(found[i].compare_rational(roots[i]) == 0);
  }
}

TEST_CASE("sturm chain counting") {
  UniPoly p = upoly({-2, 0, 1});  // x^2 - 2
  SturmChain sc(p);
  CHECK(sc.count_real_roots() == 2);
  CHECK(sc.count_roots(rat(0), rat(2)) == 1);
  CHECK(sc.count_roots(rat(-2), rat(0)) == 1);
  CHECK(sc.count_roots(rat(2), rat(10)) == 0);
  // half-open convention picks up a simple root at the right endpoint
  SturmChain lin(upoly({0, 1}));
  CHECK(lin.count_roots(rat(-1), rat(0)) == 1);
}

TEST_CASE("algebraic real comparison") {
  UniPoly x2m2 = upoly({-2, 0, 1});
  AlgebraicReal sqrt2(x2m2, rat(1), rat(2));
  CHECK(sqrt2.compare_rational(rat(3, 2)) < 0);   // sqrt2 < 3/2? no: 1.414 < 1.5 -> LT
  CHECK(compare(sqrt2, sqrt2) == Order::EQ);

  AlgebraicReal sqrt2b(upoly({-4, 0, 2}), rat(0), rat(2));  // 2x^2 - 4, same root
  CHECK(compare(sqrt2, sqrt2b) == Order::EQ);

  AlgebraicReal sqrt3(upoly({-3, 0, 1}), rat(1), rat(2));
  CHECK(compare(sqrt2, sqrt3) == Order::LT);
  CHECK(compare(sqrt3, sqrt2) == Order::GT);

  // sign_of through the defining gcd
  CHECK(sqrt2.sign_of(upoly({-2, 0, 1})) == 0);
  CHECK(sqrt2.sign_of(upoly({-1, 1})) > 0);   // x - 1 at sqrt2
  CHECK(sqrt2.sign_of(upoly({-2, 1})) < 0);   // x - 2 at sqrt2
}

TEST_CASE("compare is a total order on random triples") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<AlgebraicReal> pool;
  while (pool.size() < 40) {
    std::vector<Rational> c(5);
    for (auto& v : c) v = rat(coef(rng));
    UniPoly p(std::move(c));
    if (p.degree() < 1) continue;
    try {
      for (auto& r : isolate_real_roots(p)) pool.push_back(r);
    } catch (const precondition_error&) {
    }
  }
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  int trials = 0;
  while (trials < 1000) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    Order ab = compare(a, b), ba = compare(b, a);
    CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
    if (ab != Order::GT && compare(b, c) != Order::GT)
      CHECK(compare(a, c) != Order::GT);  // transitivity of <=
    ++trials;
  }
}

TEST_CASE("resultant on the fixed examples") {
  BiPoly unit = circle(rat(0), rat(0), rat(1));
  // Res_y(x^2+y^2-1, y) = x^2 - 1
  UniPoly r1 = resultant(unit, BiPoly::var_y(), Axis::Y);
  CHECK(r1.normalized_primitive() == upoly({-1, 0, 1}));

  // Res_y against the shifted circle: (2x-1)^2 up to a nonzero constant
  BiPoly shifted = circle(rat(1), rat(0), rat(1));
  UniPoly r2 = resultant(unit, shifted, Axis::Y).normalized_primitive();
  UniPoly expect = (upoly({-1, 2}) * upoly({-1, 2})).normalized_primitive();
  CHECK(r2 == expect);

  // shared component -> identically zero
  CHECK(resultant(unit, unit, Axis::Y).is_zero());

  CHECK_THROWS_AS(resultant(BiPoly::constant(rat(2)), BiPoly::constant(rat(3))),
                  precondition_error);
}

TEST_CASE("resultant degree bound on random pairs") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly f, g;
    int df = 1 + static_cast<int>(rng() % 3), dg = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i <= df; ++i)
      for (int j = 0; i + j <= df; ++j) f.set(i, j, rat(coef(rng)));
    for (int i = 0; i <= dg; ++i)
      for (int j = 0; i + j <= dg; ++j) g.set(i, j, rat(coef(rng)));
    if (f.is_zero() || g.is_zero() || f.is_constant() || g.is_constant()) continue;
    UniPoly r = resultant(f, g, Axis::Y);
    if (!r.is_zero()) CHECK(r.degree() <= f.total_degree() * g.total_degree());
  }
}

TEST_CASE("square-free part") {
  // (x-1)^2 -> x-1
  UniPoly sq = upoly({-1, 1}) * upoly({-1, 1});
  CHECK(square_free_part(sq) == upoly({-1, 1}));
  // x^2-1 already square-free
  CHECK(square_free_part(upoly({-1, 0, 1})) == upoly({-1, 0, 1}));
  // (x^2+y^2-1)^2 -> x^2+y^2-1
  BiPoly unit = circle(rat(0), rat(0), rat(1));
  BiPoly sq2 = unit * unit;
  CHECK(square_free_part(sq2) == unit.normalized());
}

TEST_CASE("square-free part is idempotent and preserves the real zero set") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 12; ++trial) {
    BiPoly f;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) f.set(i, j, rat(coef(rng)));
    if (f.is_zero() || f.is_constant()) continue;
    BiPoly sq = f * f;
    BiPoly s1 = square_free_part(sq);
    BiPoly s2 = square_free_part(s1);
    CHECK(s1 == s2);
    // zero sets agree on 100 rational vertical lines
    for (int k = -50; k < 50; ++k) {
      Rational x0 = rat(k, 7);
      UniPoly a = sq.substitute_x(x0), b = s1.substitute_x(x0);
      if (a.is_zero() || b.is_zero()) continue;
      auto ra = isolate_real_roots(a);
      auto rb = isolate_real_roots(b);
      REQUIRE(ra.size() == rb.size());
      for (size_t i = 0; i < ra.size(); ++i) CHECK(compare(ra[i], rb[i]) == Order::EQ);
    }
    ++checked;
  }
  REQUIRE(checked > 0);
}

TEST_CASE("bivariate gcd and component sharing") {
  BiPoly unit = circle(rat(0), rat(0), rat(1));
  BiPoly line = BiPoly::var_y() - BiPoly::var_x();
  BiPoly prod = unit * line;
  CHECK(share_component(prod, line));
  CHECK_FALSE(share_component(unit, line));
  BiPoly g = gcd_bipoly(prod, line * circle(rat(3), rat(3), rat(1)));
  CHECK(g == line.normalized());
}

TEST_CASE("modular inverse and minimal polynomial of an element") {
  UniPoly A = upoly({-2, 0, 1});  // x^2 - 2
  auto inv = invmod(UniPoly::identity(), A);
  REQUIRE(inv.has_value());
  CHECK(mulmod(*inv, UniPoly::identity(), A) == upoly({1}));

  // element q = x + 1 in Q[x]/(x^2-2): minimal poly of sqrt2+1 is x^2-2x-1
  UniPoly m = minimal_poly_of_element(upoly({1, 1}), A);
  CHECK(m == upoly({-1, -2, 1}));
}

TEST_CASE("simplest rational between") {
  Rational r = rational_strictly_between(rat(0), rat(1));
  CHECK(r > 0);
  CHECK(r < 1);
  AlgebraicReal sqrt2(upoly({-2, 0, 1}), rat(1), rat(2));
  AlgebraicReal sqrt3(upoly({-3, 0, 1}), rat(1), rat(2));
  Rational mid = rational_between(sqrt2, sqrt3);
  CHECK(sqrt2.compare_rational(mid) < 0);
  CHECK(sqrt3.compare_rational(mid) > 0);
}

TEST_CASE("rational serialization") {
  CHECK(rat_to_string(rat(3, 6)) == "1/2");
  CHECK(rat_to_string(rat(-4, 2)) == "-2");
  CHECK(rat_from_string("7/3") == rat(7, 3));
  CHECK_THROWS_AS(rat_from_string(""), precondition_error);
}
