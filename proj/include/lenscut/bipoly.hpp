#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lenscut/algebraic_real.hpp"
#include "lenscut/unipoly.hpp"

namespace lenscut {

// Sparse bivariate polynomial over Q. Key (i, j) is the monomial x^i y^j;
// zero coefficients are never stored.
class BiPoly {
 public:
  using Monomial = std::pair<int, int>;

  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly constant(const Rational& v) {
    BiPoly p;
    p.set(0, 0, v);
    return p;
  }
  static BiPoly var_x() {
    BiPoly p;
    p.set(1, 0, Rational(1));
    return p;
  }
  static BiPoly var_y() {
    BiPoly p;
    p.set(0, 1, Rational(1));
    return p;
  }

  static BiPoly from_unipoly_in_x(const UniPoly& u) {
    BiPoly p;
    for (int i = 0; i <= u.degree(); ++i) p.set(i, 0, u.coeff(i));
    return p;
  }

  static BiPoly from_unipoly_in_y(const UniPoly& u) {
    BiPoly p;
    for (int j = 0; j <= u.degree(); ++j) p.set(0, j, u.coeff(j));
    return p;
  }

  // coefficients c[j] in Q[x] of y^j
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& cs) {
    BiPoly p;
    for (size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].degree(); ++i) p.set(i, static_cast<int>(j), cs[j].coeff(i));
    return p;
  }

  void set(int i, int j, const Rational& v) {
    if (sign(v) == 0) m_.erase({i, j});
    else m_[{i, j}] = v;
  }

  void add_to(int i, int j, const Rational& v) {
    auto it = m_.find({i, j});
    if (it == m_.end()) {
      if (sign(v) != 0) m_[{i, j}] = v;
      return;
    }
    it->second += v;
    if (sign(it->second) == 0) m_.erase(it);
  }

  Rational coeff(int i, int j) const {
    auto it = m_.find({i, j});
    return it == m_.end() ? Rational(0) : it->second;
  }

  const std::map<Monomial, Rational>& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  bool is_constant() const { return m_.empty() || (m_.size() == 1 && m_.count({0, 0})); }

  int total_degree() const {
    int d = -1;
    for (const auto& [mono, c] : m_) d = std::max(d, mono.first + mono.second);
    return d;
  }
  int deg_x() const {
    int d = -1;
    for (const auto& [mono, c] : m_) d = std::max(d, mono.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [mono, c] : m_) d = std::max(d, mono.second);
    return d;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [mono, c] : b.m_) r.add_to(mono.first, mono.second, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [mono, c] : b.m_) r.add_to(mono.first, mono.second, -c);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [mono, c] : m_) r.m_[mono] = -c;
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.m_)
      for (const auto& [mb, cb] : b.m_)
        r.add_to(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return r;
  }
  friend BiPoly operator*(const Rational& s, const BiPoly& a) {
    BiPoly r;
    if (sign(s) == 0) return r;
    for (const auto& [mono, c] : a.m_) r.m_[mono] = s * c;
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.m_ == b.m_; }

  BiPoly partial_x() const {
    BiPoly r;
    for (const auto& [mono, c] : m_)
      if (mono.first > 0) r.set(mono.first - 1, mono.second, Rational(mono.first) * c);
    return r;
  }
  BiPoly partial_y() const {
    BiPoly r;
    for (const auto& [mono, c] : m_)
      if (mono.second > 0) r.set(mono.first, mono.second - 1, Rational(mono.second) * c);
    return r;
  }

  Rational eval(const Rational& x, const Rational& y) const {
    Rational r(0);
    for (const auto& [mono, c] : m_) {
      Rational t = c;
      for (int k = 0; k < mono.first; ++k) t *= x;
      for (int k = 0; k < mono.second; ++k) t *= y;
      r += t;
    }
    return r;
  }

  QInterval eval_box(const QInterval& x, const QInterval& y) const {
    // Horner in y with interval coefficients in x
    auto ys = y_coeffs();
    QInterval r(Rational(0));
    for (size_t j = ys.size(); j-- > 0;) r = r * y + ys[j].eval(x);
    return r;
  }

  // f(x0, y) as a polynomial in y
  UniPoly substitute_x(const Rational& x0) const {
    std::vector<Rational> c(std::max(deg_y() + 1, 0), Rational(0));
    for (const auto& [mono, cv] : m_) {
      Rational t = cv;
      for (int k = 0; k < mono.first; ++k) t *= x0;
      c[mono.second] += t;
    }
    return UniPoly(std::move(c));
  }

  // f(x, y0) as a polynomial in x
  UniPoly substitute_y(const Rational& y0) const {
    std::vector<Rational> c(std::max(deg_x() + 1, 0), Rational(0));
    for (const auto& [mono, cv] : m_) {
      Rational t = cv;
      for (int k = 0; k < mono.second; ++k) t *= y0;
      c[mono.first] += t;
    }
    return UniPoly(std::move(c));
  }

  // coefficients in Q[x] of powers of y
  std::vector<UniPoly> y_coeffs() const {
    int dy = deg_y();
    std::vector<std::vector<Rational>> raw(std::max(dy + 1, 0));
    int dx = deg_x();
    for (auto& v : raw) v.assign(std::max(dx + 1, 0), Rational(0));
    for (const auto& [mono, c] : m_) raw[mono.second][mono.first] = c;
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
  }

  UniPoly leading_y_coeff() const {
    auto ys = y_coeffs();
    return ys.empty() ? UniPoly() : ys.back();
  }

  // f(xs(t), ys(t)) reduced mod A at every step (A nonzero, or pass zero to skip)
  UniPoly compose_mod(const UniPoly& xs, const UniPoly& ys, const UniPoly& A) const {
    auto reduce = [&](const UniPoly& p) { return A.is_zero() ? p : mod_reduce(p, A); };
    // Horner in y; inner coefficients composed in x via Horner as well
    auto cs = y_coeffs();
    UniPoly acc;
    for (size_t j = cs.size(); j-- > 0;) {
      UniPoly cj;  // cs[j](xs) mod A
      for (int i = cs[j].degree(); i >= 0; --i) {
        cj = reduce(cj * xs + UniPoly::constant(cs[j].coeff(i)));
      }
      acc = reduce(acc * ys + cj);
    }
    return acc;
  }

  BiPoly swap_xy() const {
    BiPoly r;
    for (const auto& [mono, c] : m_) r.m_[{mono.second, mono.first}] = c;
    return r;
  }

  // f(x + t*y, y)
  BiPoly shear_x(const Rational& t) const {
    BiPoly x_new = BiPoly::var_x() + t * BiPoly::var_y();
    return substitute_vars(x_new, BiPoly::var_y());
  }

  // f(x, y + t*x)
  BiPoly shear_y(const Rational& t) const {
    BiPoly y_new = BiPoly::var_y() + t * BiPoly::var_x();
    return substitute_vars(BiPoly::var_x(), y_new);
  }

  BiPoly substitute_vars(const BiPoly& xs, const BiPoly& ys) const {
    BiPoly acc;
    auto cs = y_coeffs();
    for (size_t j = cs.size(); j-- > 0;) {
      BiPoly cj;
      for (int i = cs[j].degree(); i >= 0; --i)
        cj = cj * xs + BiPoly::constant(cs[j].coeff(i));
      acc = acc * ys + cj;
    }
    return acc;
  }

  // gcd over Q[x] of the y-coefficients: the product of components that do not
  // involve y (vertical lines when this is a curve polynomial)
  UniPoly y_content() const {
    UniPoly g;
    for (const auto& cf : y_coeffs()) {
      if (cf.is_zero()) continue;
      g = g.is_zero() ? cf : gcd(g, cf);
      if (g.degree() == 0) break;
    }
    return g.is_zero() ? UniPoly() : g;
  }

  // divide out the y-content
  BiPoly y_primitive_part() const {
    UniPoly c = y_content();
    if (c.is_zero() || c.degree() == 0) return *this;
    auto cs = y_coeffs();
    for (auto& cf : cs)
      if (!cf.is_zero()) cf = div_exact(cf, c);
    return from_y_coeffs(cs);
  }

  // integer-primitive scaling with positive coefficient on the graded-lex
  // leading monomial; canonical representative of the projective class
  BiPoly normalized() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [mono, c] : m_)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::map<Monomial, Rational> scaled;
    for (const auto& [mono, c] : m_) {
      Rational v = c * Rational(den_lcm);
      v.canonicalize();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
      scaled[mono] = v;
    }
    if (num_gcd == 0) num_gcd = 1;
    // pick the graded-lex largest monomial for the sign convention
    Monomial lead{-1, -1};
    int best = -1;
    for (const auto& [mono, c] : scaled) {
      int d = mono.first + mono.second;
      if (d > best || (d == best && mono > lead)) {
        best = d;
        lead = mono;
      }
    }
    Rational scale = Rational(1) / Rational(num_gcd);
    if (sign(scaled[lead]) < 0) scale = -scale;
    BiPoly r;
    for (auto& [mono, c] : scaled) {
      Rational v = c * scale;
      v.canonicalize();
      r.m_[mono] = v;
    }
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
      const auto& [mono, c] = *it;
      if (!out.empty()) out += sign(c) > 0 ? " + " : " - ";
      else if (sign(c) < 0) out += "-";
      Rational a = rat_abs(c);
      bool unit = (a == 1 && (mono.first > 0 || mono.second > 0));
      if (!unit) out += rat_to_string(a);
      if (mono.first > 0) {
        out += "x";
        if (mono.first > 1) out += "^" + std::to_string(mono.first);
      }
      if (mono.second > 0) {
        out += "y";
        if (mono.second > 1) out += "^" + std::to_string(mono.second);
      }
    }
    return out;
  }

 private:
  std::map<Monomial, Rational> m_;
};

// ---- univariate Sylvester-style determinants (used at sample points) ----

namespace detail {

inline Rational det_gauss(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sign(m[piv][col]) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = Rational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (sign(m[r][col]) == 0) continue;
      Rational f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Sylvester matrix rows of A (deg m) and B (deg n) in y, coefficient basis
// y^{m+n-1} .. y^0.
inline std::vector<std::vector<Rational>> sylvester_rows(const UniPoly& A, const UniPoly& B) {
  int m = A.degree(), n = B.degree();
  int size = m + n;
  std::vector<std::vector<Rational>> M;
  for (int r = 0; r < n; ++r) {
    std::vector<Rational> row(size, Rational(0));
    for (int i = 0; i <= m; ++i) row[r + (m - i)] = A.coeff(i);
    M.push_back(std::move(row));
  }
  for (int r = 0; r < m; ++r) {
    std::vector<Rational> row(size, Rational(0));
    for (int i = 0; i <= n; ++i) row[r + (n - i)] = B.coeff(i);
    M.push_back(std::move(row));
  }
  return M;
}

inline Rational resultant_uni(const UniPoly& A, const UniPoly& B) {
  int m = A.degree(), n = B.degree();
  if (m <= 0 && n <= 0) return Rational(1);
  if (m <= 0) {
    Rational r(1);
    for (int k = 0; k < n; ++k) r *= A.coeff(0);
    return r;
  }
  if (n <= 0) {
    Rational r(1);
    for (int k = 0; k < m; ++k) r *= B.coeff(0);
    return r;
  }
  return det_gauss(sylvester_rows(A, B));
}

// Coefficients (c1, c0) of the first subresultant S_1 = c1*y + c0 of A, B.
// Assumes deg A >= 1, deg B >= 1, and deg A + deg B >= 3.
inline std::pair<Rational, Rational> subresultant1_uni(const UniPoly& A, const UniPoly& B) {
  int m = A.degree(), n = B.degree();
  int rows = m + n - 2, cols = m + n - 1;
  std::vector<std::vector<Rational>> M;
  for (int r = 0; r < n - 1; ++r) {
    std::vector<Rational> row(cols, Rational(0));
    for (int i = 0; i <= m; ++i) row[r + (m - i)] = A.coeff(i);
    M.push_back(std::move(row));
  }
  for (int r = 0; r < m - 1; ++r) {
    std::vector<Rational> row(cols, Rational(0));
    for (int i = 0; i <= n; ++i) row[r + (n - i)] = B.coeff(i);
    M.push_back(std::move(row));
  }
  auto minor_det = [&](int extra_col) {
    std::vector<std::vector<Rational>> sub(rows, std::vector<Rational>(rows));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < rows - 1; ++c) sub[r][c] = M[r][c];
      sub[r][rows - 1] = M[r][extra_col];
    }
    return det_gauss(std::move(sub));
  };
  return {minor_det(rows - 1), minor_det(rows)};
}

inline UniPoly lagrange_interpolate(const std::vector<Rational>& xs,
                                    const std::vector<Rational>& ys) {
  UniPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / denom) * basis;
  }
  return acc;
}

// Sample x-values avoiding roots of the given polynomials.
inline std::vector<Rational> good_samples(size_t count, const std::vector<UniPoly>& avoid) {
  std::vector<Rational> xs;
  long v = 0;
  while (xs.size() < count) {
    Rational x(v);
    bool ok = true;
    for (const auto& p : avoid)
      if (!p.is_zero() && p.sign_at(x) == 0) {
        ok = false;
        break;
      }
    if (ok) xs.push_back(x);
    v = v > 0 ? -v : -v + 1;  // 0, 1, -1, 2, -2, ...
  }
  return xs;
}

}  // namespace detail

enum class Axis { X, Y };

// Resultant eliminating y (or x by symmetry); result is univariate in the
// kept variable. Vanishes where f and g share a root over the eliminated
// variable or both leading coefficients vanish.
inline UniPoly resultant(const BiPoly& f_in, const BiPoly& g_in, Axis eliminate = Axis::Y) {
  if (f_in.is_zero() || g_in.is_zero())
    throw precondition_error("resultant of zero polynomial");
  BiPoly f = f_in, g = g_in;
  if (eliminate == Axis::X) {
    f = f.swap_xy();
    g = g.swap_xy();
  }
  if (f.is_constant() && g.is_constant())
    throw precondition_error("resultant of two constants");
  int m = f.deg_y(), n = g.deg_y();
  if (m <= 0 && n <= 0) return UniPoly::constant(Rational(1));
  if (m <= 0) {
    UniPoly base = f.substitute_y(Rational(0));
    UniPoly r = UniPoly::constant(Rational(1));
    for (int k = 0; k < n; ++k) r = r * base;
    return r;
  }
  if (n <= 0) {
    UniPoly base = g.substitute_y(Rational(0));
    UniPoly r = UniPoly::constant(Rational(1));
    for (int k = 0; k < m; ++k) r = r * base;
    return r;
  }
  // shared component: resultant is identically zero
  size_t bound = static_cast<size_t>(n * std::max(f.deg_x(), 0) + m * std::max(g.deg_x(), 0)) + 1;
  auto xs = detail::good_samples(bound, {f.leading_y_coeff(), g.leading_y_coeff()});
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x0 : xs)
    ys.push_back(detail::resultant_uni(f.substitute_x(x0), g.substitute_x(x0)));
  return detail::lagrange_interpolate(xs, ys);
}

// First subresultant S_1(x, y) = c1(x)*y + c0(x) of f and g with respect to y.
// Valid wherever the leading y-coefficients of f and g do not vanish.
inline std::pair<UniPoly, UniPoly> first_subresultant_y(const BiPoly& f, const BiPoly& g) {
  int m = f.deg_y(), n = g.deg_y();
  if (m < 1 || n < 1) throw precondition_error("first_subresultant_y: need positive y-degrees");
  auto ycf = f.y_coeffs();
  auto ycg = g.y_coeffs();
  if (n == 1) return {ycg[1], ycg[0]};
  if (m == 1) return {ycf[1], ycf[0]};
  size_t bound = static_cast<size_t>(n * std::max(f.deg_x(), 0) + m * std::max(g.deg_x(), 0)) + 1;
  auto xs = detail::good_samples(bound, {f.leading_y_coeff(), g.leading_y_coeff()});
  std::vector<Rational> c1s, c0s;
  for (const auto& x0 : xs) {
    auto [c1, c0] = detail::subresultant1_uni(f.substitute_x(x0), g.substitute_x(x0));
    c1s.push_back(c1);
    c0s.push_back(c0);
  }
  return {detail::lagrange_interpolate(xs, c1s), detail::lagrange_interpolate(xs, c0s)};
}

// ---- bivariate gcd (primitive PRS in y over Q[x]) ----

namespace detail {

// pseudo-remainder of A by B in y: lc(B)^(degA-degB+1) * A mod B
inline std::vector<UniPoly> prem_y(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  const UniPoly& lb = b.back();
  int steps = da - db + 1;
  for (int k = 0; k < steps; ++k) {
    int cur = static_cast<int>(a.size()) - 1;
    if (cur < db) {
      for (auto& c : a) c = lb * c;
      continue;
    }
    UniPoly top = a[cur];
    for (auto& c : a) c = lb * c;
    for (int i = 0; i <= db; ++i) a[cur - db + i] = a[cur - db + i] - top * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.empty()) break;
  }
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

inline std::vector<UniPoly> primitive_y(std::vector<UniPoly> a) {
  UniPoly g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c);
    if (g.degree() == 0) break;
  }
  if (g.is_zero() || g.degree() == 0) return a;
  for (auto& c : a)
    if (!c.is_zero()) c = div_exact(c, g);
  return a;
}

}  // namespace detail

// gcd of two bivariate polynomials, normalized. Constant result (degree 0)
// means no common component.
inline BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  int dyf = f.deg_y(), dyg = g.deg_y();
  if (dyf == 0 && dyg == 0) {
    UniPoly a = f.substitute_y(Rational(0)), b = g.substitute_y(Rational(0));
    return BiPoly::from_unipoly_in_x(gcd(a, b)).normalized();
  }
  if (dyf == 0) {
    UniPoly a = f.substitute_y(Rational(0));
    return BiPoly::from_unipoly_in_x(gcd(a, g.y_content())).normalized();
  }
  if (dyg == 0) {
    UniPoly b = g.substitute_y(Rational(0));
    return BiPoly::from_unipoly_in_x(gcd(b, f.y_content())).normalized();
  }
  UniPoly cf = f.y_content(), cg = g.y_content();
  UniPoly cont_gcd = gcd(cf, cg);
  std::vector<UniPoly> A = f.y_primitive_part().y_coeffs();
  std::vector<UniPoly> B = g.y_primitive_part().y_coeffs();
  if (A.size() < B.size()) std::swap(A, B);
  for (;;) {
    std::vector<UniPoly> R = detail::prem_y(A, B);
    if (R.empty()) break;  // B divides A: pp-gcd is B
    if (R.size() <= 1) {
      // coprime primitive parts
      B.clear();
      break;
    }
    A = std::move(B);
    B = detail::primitive_y(R);
  }
  BiPoly pp = B.empty() ? BiPoly::constant(Rational(1))
                        : BiPoly::from_y_coeffs(detail::primitive_y(B));
  BiPoly result = BiPoly::from_unipoly_in_x(cont_gcd) * pp;
  return result.normalized();
}

inline bool share_component(const BiPoly& f, const BiPoly& g) {
  return gcd_bipoly(f, g).total_degree() >= 1;
}

// exact division in y when d divides f
inline BiPoly divide_exact_bipoly(const BiPoly& f, const BiPoly& d) {
  if (d.is_zero()) throw precondition_error("division by zero polynomial");
  if (f.is_zero()) return f;
  if (d.is_constant()) return (Rational(1) / d.coeff(0, 0)) * f;
  if (d.deg_y() == 0) {
    // divisor in Q[x]: divide every y-coefficient
    UniPoly dx = d.substitute_y(Rational(0));
    auto cs = f.y_coeffs();
    for (auto& c : cs)
      if (!c.is_zero()) c = div_exact(c, dx);
    return BiPoly::from_y_coeffs(cs);
  }
  std::vector<UniPoly> rem = f.y_coeffs();
  std::vector<UniPoly> div = d.y_coeffs();
  int db = static_cast<int>(div.size()) - 1;
  std::vector<UniPoly> quo(rem.size() >= div.size() ? rem.size() - div.size() + 1 : 0);
  while (static_cast<int>(rem.size()) - 1 >= db) {
    int cur = static_cast<int>(rem.size()) - 1;
    UniPoly q = div_exact(rem[cur], div[db]);
    quo[cur - db] = q;
    for (int i = 0; i <= db; ++i) rem[cur - db + i] = rem[cur - db + i] - q * div[i];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (rem.empty()) break;
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw precondition_error("divide_exact_bipoly: inexact division");
  return BiPoly::from_y_coeffs(quo);
}

// f / gcd(f, f_x, f_y): same real zero set, square-free
inline BiPoly square_free_part_bipoly(const BiPoly& f) {
  if (f.is_zero()) throw precondition_error("zero polynomial has no square-free part");
  if (f.total_degree() <= 0) return f.normalized();
  BiPoly fx = f.partial_x(), fy = f.partial_y();
  BiPoly g = f;
  if (!fx.is_zero()) g = gcd_bipoly(g, fx);
  if (!fy.is_zero()) g = gcd_bipoly(g, fy);
  if (g.total_degree() <= 0) return f.normalized();
  return divide_exact_bipoly(f, g).normalized();
}

// dispatcher mirroring the one-signature contract for both kinds
inline UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw precondition_error("zero polynomial has no square-free part");
  return p.square_free_part().normalized_primitive();
}
inline BiPoly square_free_part(const BiPoly& p) { return square_free_part_bipoly(p); }

}  // namespace lenscut
