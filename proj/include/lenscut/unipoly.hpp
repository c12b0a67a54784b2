#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenscut/rational.hpp"

namespace lenscut {

// Dense univariate polynomial over Q. Coefficient index = power of x.
// Canonical form: no trailing zero coefficients; empty vector = zero polynomial.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
  // x - r
  static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }
  static UniPoly identity() { return UniPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
  }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  QInterval eval(const QInterval& x) const {
    QInterval r(Rational(0));
    for (size_t i = c_.size(); i-- > 0;) r = r * x + QInterval(c_[i]);
    return r;
  }

  int sign_at(const Rational& x) const { return sign(eval(x)); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (sign(s) == 0) return UniPoly();
    std::vector<Rational> r(a.c_);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Division with remainder over Q; divisor must be nonzero.
  friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    assert(!b.is_zero());
    std::vector<Rational> rem(a.c_);
    int db = b.degree();
    if (static_cast<int>(rem.size()) - 1 < db) return {UniPoly(), a};
    std::vector<Rational> quo(rem.size() - db, Rational(0));
    const Rational& lb = b.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
      if (sign(rem[i]) == 0) continue;
      Rational q = rem[i] / lb;
      quo[i - db] = q;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }

  // Exact division; throws if the remainder is nonzero.
  friend UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw precondition_error("div_exact: inexact polynomial division");
    return q;
  }

  // Monic gcd; gcd(p, 0) = monic(p).
  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      auto [q, r] = divrem(a, b);
      (void)q;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
  }

  // u with u*a == g (mod m), g = gcd(a, m). Classic extended Euclid.
  friend std::pair<UniPoly, UniPoly> extended_gcd_first(UniPoly a, UniPoly m) {
    UniPoly old_r = std::move(a), r = std::move(m);
    UniPoly old_s = UniPoly::constant(Rational(1)), s = UniPoly();
    while (!r.is_zero()) {
      auto [q, rem] = divrem(old_r, r);
      UniPoly new_s = old_s - q * s;
      old_r = std::move(r);
      r = std::move(rem);
      old_s = std::move(s);
      s = std::move(new_s);
    }
    if (old_r.is_zero()) return {UniPoly(), UniPoly()};
    Rational inv_lead = Rational(1) / old_r.leading();
    return {inv_lead * old_s, inv_lead * old_r};
  }

  // p / gcd(p, p'): same roots, all simple.
  UniPoly square_free_part() const {
    if (is_zero()) throw precondition_error("zero polynomial has no square-free part");
    if (degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return div_exact(*this, g);
  }

  // Integer-primitive representative with positive leading coefficient.
  // Convenient canonical form for defining polynomials.
  UniPoly normalized_primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& q : c_) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<Rational> r(c_);
    for (auto& q : r) {
      q *= Rational(den_lcm);
      q.canonicalize();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    Rational scale = Rational(1) / Rational(num_gcd);
    if (sign(r.back()) < 0) scale = -scale;
    for (auto& q : r) {
      q *= scale;
      q.canonicalize();
    }
    return UniPoly(std::move(r));
  }

  // p(a*x + b)
  UniPoly compose_affine(const Rational& a, const Rational& b) const {
    UniPoly result;
    UniPoly arg({b, a});
    for (size_t i = c_.size(); i-- > 0;) {
      result = result * arg + UniPoly::constant(c_[i]);
    }
    return result;
  }

  UniPoly compose(const UniPoly& inner) const {
    UniPoly result;
    for (size_t i = c_.size(); i-- > 0;) {
      result = result * inner + UniPoly::constant(c_[i]);
    }
    return result;
  }

  // x^n * p(1/x) with n = degree
  UniPoly reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (sign(c_[i]) == 0) continue;
      if (!out.empty()) out += sign(c_[i]) > 0 ? " + " : " - ";
      else if (sign(c_[i]) < 0) out += "-";
      Rational a = rat_abs(c_[i]);
      bool unit = (a == 1 && i > 0);
      if (!unit) out += rat_to_string(a);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// ---- modular arithmetic in Q[x]/(A) ----

inline UniPoly mod_reduce(const UniPoly& p, const UniPoly& A) {
  return divrem(p, A).second;
}

inline UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& A) {
  return mod_reduce(a * b, A);
}

// Inverse of a modulo A when gcd(a, A) = 1; nullopt otherwise.
inline std::optional<UniPoly> invmod(const UniPoly& a, const UniPoly& A) {
  auto [u, g] = extended_gcd_first(a, A);
  if (g.degree() != 0) return std::nullopt;
  return mod_reduce(u, A);
}

// Monic minimal polynomial of the element q in Q[x]/(A): the lowest-degree
// monic m with m(q) == 0 (mod A). For a root a of A, m(q(a)) = 0.
inline UniPoly minimal_poly_of_element(const UniPoly& q, const UniPoly& A) {
  int n = A.degree();
  assert(n >= 1);
  // rows: coefficient vectors of q^k mod A, k = 0..n
  std::vector<std::vector<Rational>> pows;
  UniPoly qk = UniPoly::constant(Rational(1));
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> row(n, Rational(0));
    for (int i = 0; i <= qk.degree(); ++i) row[i] = qk.coeff(i);
    pows.push_back(std::move(row));
    if (k < n) qk = mulmod(qk, q, A);
  }
  // Find the least d such that q^d is a combination of lower powers:
  // incremental Gaussian elimination over Q.
  std::vector<std::vector<Rational>> basis;          // reduced rows
  std::vector<std::vector<Rational>> combo;          // expression in original powers
  std::vector<int> pivot_col;
  for (int d = 0; d <= n; ++d) {
    std::vector<Rational> row = pows[d];
    std::vector<Rational> cmb(n + 1, Rational(0));
    cmb[d] = Rational(1);
    for (size_t b = 0; b < basis.size(); ++b) {
      int pc = pivot_col[b];
      if (sign(row[pc]) == 0) continue;
      Rational f = row[pc];
      for (int j = 0; j < n; ++j) row[j] -= f * basis[b][j];
      for (int j = 0; j <= n; ++j) cmb[j] -= f * combo[b][j];
    }
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (sign(row[j]) != 0) {
        pc = j;
        break;
      }
    if (pc < 0) {
      // q^d = sum of lower powers: minimal polynomial found.
      std::vector<Rational> m(d + 1, Rational(0));
      Rational lead = cmb[d];
      for (int j = 0; j <= d; ++j) m[j] = cmb[j] / lead;
      return UniPoly(std::move(m));
    }
    Rational inv = Rational(1) / row[pc];
    for (int j = 0; j < n; ++j) row[j] *= inv;
    for (int j = 0; j <= n; ++j) cmb[j] *= inv;
    basis.push_back(std::move(row));
    combo.push_back(std::move(cmb));
    pivot_col.push_back(pc);
  }
  throw verification_error("minimal_poly_of_element: no relation found");
}

// ---- Sturm sequences and root counting ----

// Standard Sturm chain p, p', -rem(...). Counts distinct real roots even for
// non-square-free p, provided evaluation endpoints are not roots of p (the
// half-open convention (a, b] tolerates simple roots at b).
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw precondition_error("Sturm chain of zero polynomial");
    chain_.push_back(p);
    if (p.degree() >= 1) {
      chain_.push_back(p.derivative());
      while (chain_.back().degree() >= 1) {
        UniPoly r = divrem(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(-r);
      }
    }
  }

  int variations_at(const Rational& x) const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
      int s = p.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  int variations_at_neg_inf() const { return variations_at_inf(-1); }
  int variations_at_pos_inf() const { return variations_at_inf(+1); }

  // # distinct roots in (a, b]
  int count_roots(const Rational& a, const Rational& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
  }

  // # distinct roots in (-inf, c]
  int count_roots_below_eq(const Rational& c) const {
    return variations_at_neg_inf() - variations_at(c);
  }

  int count_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  int variations_at_inf(int dir) const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
      if (p.is_zero()) continue;
      int s = sign(p.leading());
      if (dir < 0 && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  std::vector<UniPoly> chain_;
};

}  // namespace lenscut
