#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "lenscut/bipoly.hpp"
#include "lenscut/point.hpp"

namespace lenscut {

inline UniPoly compose_mod_uni(const UniPoly& u, const UniPoly& inner, const UniPoly& A) {
  UniPoly acc;
  for (int i = u.degree(); i >= 0; --i)
    acc = mod_reduce(acc * inner + UniPoly::constant(u.coeff(i)), A);
  return acc;
}

// Evaluation site for the x-variable of a bivariate chain: either a bare
// algebraic number, or xq(alpha) through a joint representation.
struct XEval {
  const AlgebraicReal* alpha = nullptr;
  const UniPoly* xq = nullptr;  // null = identity

  int sign_of(const UniPoly& u) const {
    if (u.is_zero()) return 0;
    if (alpha->is_rational()) {
      Rational v = alpha->rational_value();
      return sign(u.eval(xq ? xq->eval(v) : v));
    }
    if (!xq) return alpha->sign_of(u);
    return alpha->sign_of(compose_mod_uni(u, *xq, alpha->defining()));
  }

  QInterval interval_of(const UniPoly& u) const {
    if (!xq) return u.eval(alpha->interval());
    return u.eval(xq->eval(alpha->interval()));
  }

  void refine() const { alpha->refine_step(); }
};

// Sturm chain of P(x, y) and dP/dy taken over the rational function field
// Q(x), stored as primitive bivariate parts with scalar correction factors
// num/den in Q[x]. Specializing x at a site where every leading y-coefficient
// and every correction factor is nonzero yields the genuine Sturm chain of
// the specialized polynomial, so sign-variation counting applies verbatim.
class SturmChainQX {
 public:
  explicit SturmChainQX(const BiPoly& P) {
    if (P.deg_y() < 1) throw precondition_error("SturmChainQX: y-degree must be positive");
    UniPoly one = UniPoly::constant(Rational(1));
    push_elem(P.y_coeffs(), one, one);
    push_elem(P.partial_y().y_coeffs(), one, one);
    for (;;) {
      const Elem& A = elems_[elems_.size() - 2];
      const Elem& B = elems_.back();
      if (B.degy == 0) break;
      std::vector<UniPoly> R = detail::prem_y(A.yc, B.yc);
      if (R.empty()) break;
      UniPoly g;
      for (const auto& c : R)
        if (!c.is_zero()) g = g.is_zero() ? c : gcd(g, c);
      if (g.degree() >= 1)
        for (auto& c : R)
          if (!c.is_zero()) c = div_exact(c, g);
      else
        g = one;
      int delta = A.degy - B.degy;
      UniPoly den = A.den;
      for (int k = 0; k <= delta; ++k) den = den * B.lcy;
      UniPoly num = -(A.num * g);
      UniPoly d = gcd(num, den);
      if (d.degree() >= 1) {
        num = div_exact(num, d);
        den = div_exact(den, d);
      }
      push_elem(std::move(R), std::move(num), std::move(den));
    }
  }

  struct Prepared {
    const SturmChainQX* chain = nullptr;
    XEval at;
    std::vector<int> sigma;  // sign(num*den) per element at the site
    std::vector<int> lcsgn;  // sign of the leading y-coefficient at the site
    size_t len = 0;          // usable chain prefix at the site
    bool valid = false;
  };

  // The chain specializes at the site when no correction denominator and no
  // leading coefficient vanishes there. A vanishing numerator means the
  // specialized remainder sequence terminated just before that element (the
  // previous element is the gcd), which is a valid shorter chain.
  Prepared prepare(const XEval& at) const {
    Prepared p;
    p.chain = this;
    p.at = at;
    for (const auto& e : elems_) {
      int sd = at.sign_of(e.den);
      if (sd == 0) return p;
      int sn = at.sign_of(e.num);
      if (sn == 0) {
        if (p.sigma.size() < 2) return p;
        p.len = p.sigma.size();
        p.valid = true;
        return p;
      }
      int sl = at.sign_of(e.lcy);
      if (sl == 0) return p;
      p.sigma.push_back(sn * sd);
      p.lcsgn.push_back(sl);
    }
    p.len = p.sigma.size();
    p.valid = true;
    return p;
  }

  int sign_of_P_at(const Prepared& p, const Rational& c) const {
    return p.at.sign_of(substitute_y(0, c));
  }

  int variations_at(const Prepared& p, const Rational& c) const {
    int var = 0, prev = 0;
    for (size_t i = 0; i < p.len; ++i) {
      int s = p.sigma[i] * p.at.sign_of(substitute_y(i, c));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  int variations_at_inf(const Prepared& p, int dir) const {
    int var = 0, prev = 0;
    for (size_t i = 0; i < p.len; ++i) {
      int s = p.sigma[i] * p.lcsgn[i];
      if (dir < 0 && elems_[i].degy % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  // distinct real roots of P(x*, .)
  int count_total(const Prepared& p) const {
    return variations_at_inf(p, -1) - variations_at_inf(p, +1);
  }

  // distinct real roots in (-inf, c]
  int count_below_eq(const Prepared& p, const Rational& c) const {
    return variations_at_inf(p, -1) - variations_at(p, c);
  }

  // strict upper bound B with all real roots of P(x*, .) inside (-B, B)
  Rational root_bound(const Prepared& p) const {
    const Elem& e0 = elems_[0];
    for (;;) {
      QInterval lead = p.at.interval_of(e0.yc.back());
      if (!lead.contains_zero()) {
        Rational lead_abs = std::min(rat_abs(lead.lo), rat_abs(lead.hi));
        Rational m(0);
        for (size_t j = 0; j + 1 < e0.yc.size(); ++j) {
          QInterval ci = p.at.interval_of(e0.yc[j]);
          m = std::max(m, std::max(rat_abs(ci.lo), rat_abs(ci.hi)));
        }
        return Rational(1) + m / lead_abs;
      }
      p.at.refine();
    }
  }

 private:
  struct Elem {
    std::vector<UniPoly> yc;
    UniPoly num, den, lcy;
    int degy;
  };

  void push_elem(std::vector<UniPoly> yc, UniPoly num, UniPoly den) {
    while (!yc.empty() && yc.back().is_zero()) yc.pop_back();
    if (yc.empty()) throw verification_error("SturmChainQX: zero chain element");
    Elem e;
    e.lcy = yc.back();
    e.degy = static_cast<int>(yc.size()) - 1;
    e.yc = std::move(yc);
    e.num = std::move(num);
    e.den = std::move(den);
    elems_.push_back(std::move(e));
  }

  UniPoly substitute_y(size_t i, const Rational& c) const {
    const auto& yc = elems_[i].yc;
    UniPoly acc;
    for (size_t j = yc.size(); j-- > 0;) acc = c * acc + yc[j];
    return acc;
  }

  std::vector<Elem> elems_;
};

// Isolating windows for the real roots of f(x*, .): rational separators
// s_0 < r_1 < s_1 < ... < r_count < s_count in the sheared frame
// y' = y + shear_t * x. The shear only reindexes nothing: it preserves the
// vertical order of roots at any fixed x, so window ranks equal root ranks.
struct RootWindows {
  Rational shear_t;
  int count = 0;
  std::vector<Rational> seps;
};

// Cache of chains, keyed by (y-degree after truncation, shear value).
struct ChainCache {
  std::map<std::pair<int, std::pair<long, long>>, std::shared_ptr<SturmChainQX>> chains;

  static std::pair<long, long> key_of(const Rational& t) {
    return {t.get_num().get_si(), t.get_den().get_si()};
  }
};

namespace detail {

inline const std::vector<Rational>& shear_candidates() {
  static const std::vector<Rational> ts = [] {
    std::vector<Rational> v;
    v.push_back(rat(0));
    for (long k : {1L, 2L, 3L, 5L, 7L, 11L}) {
      v.push_back(rat(k));
      v.push_back(rat(-k));
    }
    for (long k : {2L, 3L, 5L, 7L}) {
      v.push_back(rat(1, k));
      v.push_back(rat(-1, k));
    }
    return v;
  }();
  return ts;
}

}  // namespace detail

// Compute root windows of f(x*, .) at the site. The y-degree is first
// truncated to the terms that survive at x*, which keeps the leading
// coefficient of the chain nonzero there; degenerate sign patterns in the
// rest of the chain are escaped by shearing y.
inline RootWindows compute_root_windows(const BiPoly& f, const XEval& at,
                                        ChainCache* cache = nullptr) {
  auto ycs = f.y_coeffs();
  int mt = -1;
  for (int j = static_cast<int>(ycs.size()) - 1; j >= 0; --j) {
    if (!ycs[j].is_zero() && at.sign_of(ycs[j]) != 0) {
      mt = j;
      break;
    }
  }
  if (mt < 0)
    throw precondition_error("compute_root_windows: polynomial vanishes on this vertical line");
  RootWindows w;
  if (mt == 0) return w;  // nonzero constant in y: no roots

  std::vector<UniPoly> trunc(ycs.begin(), ycs.begin() + mt + 1);
  BiPoly ftrunc = BiPoly::from_y_coeffs(trunc);

  for (const Rational& t : detail::shear_candidates()) {
    std::shared_ptr<SturmChainQX> chain;
    std::pair<int, std::pair<long, long>> key{mt, ChainCache::key_of(t)};
    if (cache) {
      auto it = cache->chains.find(key);
      if (it != cache->chains.end()) chain = it->second;
    }
    if (!chain) {
      BiPoly sheared = sign(t) == 0 ? ftrunc : ftrunc.shear_y(-t);
      chain = std::make_shared<SturmChainQX>(sheared);
      if (cache) cache->chains[key] = chain;
    }
    auto prep = chain->prepare(at);
    if (!prep.valid) continue;

    w.shear_t = t;
    w.count = chain->count_total(prep);
    w.seps.clear();
    if (w.count == 0) return w;

    Rational B = chain->root_bound(prep);
    std::vector<Rational> seps{-B, B};
    // recursively split windows until each holds exactly one root
    struct Task {
      Rational lo, hi;
      int clo, chi;
    };
    std::vector<Task> stack{{-B, B, 0, w.count}};
    bool ok = true;
    while (!stack.empty() && ok) {
      Task tk = stack.back();
      stack.pop_back();
      if (tk.chi - tk.clo <= 1) continue;
      Rational m;
      bool found = false;
      Rational lo = tk.lo, hi = tk.hi;
      for (int attempt = 0; attempt < 64; ++attempt) {
        m = rational_strictly_between(lo, hi);
        if (chain->sign_of_P_at(prep, m) != 0) {
          found = true;
          break;
        }
        // midpoint hit a root: bias the bracket and retry
        if (attempt % 2 == 0) lo = (lo + m) / 2;
        else hi = (m + hi) / 2;
      }
      if (!found) {
        ok = false;
        break;
      }
      int cm = chain->count_below_eq(prep, m);
      seps.push_back(m);
      stack.push_back({tk.lo, m, tk.clo, cm});
      stack.push_back({m, tk.hi, cm, tk.chi});
    }
    if (!ok) continue;  // pathological separator search: try next shear
    std::sort(seps.begin(), seps.end());
    w.seps = std::move(seps);
    return w;
  }
  throw retry_exhausted_error("compute_root_windows: no valid shear found");
}

// Rank (0-based, bottom to top) of a root y0 of f(x*, .) among all its real
// roots; sign_rel(s) must return the exact sign of (y0 + shear_t*x*) - s.
inline int window_rank(const RootWindows& w, const std::function<int(const Rational&)>& sign_rel) {
  int lo = 0, hi = static_cast<int>(w.seps.size()) - 1;
  // count separators strictly below the value; value is never equal to one
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (sign_rel(w.seps[mid]) > 0) lo = mid + 1;
    else hi = mid;
  }
  return lo - 1;
}

}  // namespace lenscut
