#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenscut/intersect.hpp"

namespace lenscut {

// x-coordinate extended with the two infinities, for arc ranges.
struct ExtendedX {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  std::optional<AlgebraicReal> value;

  static ExtendedX neg_inf() { return {Kind::NegInf, std::nullopt}; }
  static ExtendedX pos_inf() { return {Kind::PosInf, std::nullopt}; }
  static ExtendedX at(AlgebraicReal v) { return {Kind::Finite, std::move(v)}; }
  bool is_finite() const { return kind == Kind::Finite; }
};

// sign of (x - e): -1 when x is left of e
inline int compare_extended(const AlgebraicReal& x, const ExtendedX& e) {
  switch (e.kind) {
    case ExtendedX::Kind::NegInf: return 1;
    case ExtendedX::Kind::PosInf: return -1;
    default: return static_cast<int>(compare(x, *e.value));
  }
}

struct ArcEnd {
  enum class Kind { Unbounded, AtPoint, AsymptoteUp, AsymptoteDown };
  Kind kind = Kind::Unbounded;
  int point_index = -1;  // removed-point index for Kind::AtPoint
};

struct ArcPiece {
  int slab;
  int rank;  // branch rank at the slab sample, 0 = lowest
};

// Maximal smooth x-monotone open piece of the non-vertical part of a curve.
// Identified by parent curve, open x-range and the branch rank at a stored
// rational sample abscissa. The piece list records the rank in every slab
// the arc spans (ranks can change across events the arc passes through).
struct XMonotoneArc {
  std::string parent;
  ExtendedX x_lo, x_hi;
  ArcEnd end_lo, end_hi;
  std::vector<ArcPiece> pieces;
  Rational sample_x;
  int branch = 0;
};

struct VerticalSegment {
  AlgebraicReal x;
  std::optional<AlgebraicReal> y_lo, y_hi;  // nullopt = unbounded
  int lo_point = -1, hi_point = -1;         // delimiting removed points
};

struct RemovedPoint {
  Point2 p;
  bool isolated = false;
  bool on_vertical_line = false;
};

inline Rational rational_floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(f);
}

// Full x-monotone decomposition of one plane curve: arcs of the smooth
// finite-slope part, vertical segments from components independent of y,
// and the removed points (critical points, vertical-line crossings,
// isolated points). Provides the exact fiber-rank queries the downstream
// modules need.
class CurveAnalysis {
 public:
  explicit CurveAnalysis(const PlaneCurve& c) : curve_(c) {
    v_ = c.f().y_content().normalized_primitive();
    w_ = c.f().y_primitive_part();
    has_curve_part_ = w_.deg_y() >= 1;
    build();
  }

  const PlaneCurve& curve() const { return curve_; }
  const BiPoly& w() const { return w_; }
  const UniPoly& vertical_part() const { return v_; }
  bool has_curve_part() const { return has_curve_part_; }
  const std::vector<XMonotoneArc>& arcs() const { return arcs_; }
  const std::vector<VerticalSegment>& vertical_segments() const { return segments_; }
  const std::vector<RemovedPoint>& removed_points() const { return removed_; }
  int component_count() const { return components_; }

  std::vector<AlgebraicReal> event_xs() const {
    std::vector<AlgebraicReal> out;
    for (const auto& e : events_) out.push_back(e.x);
    return out;
  }

  // Rank of p.y among the fiber roots of w(p.x, .); p must satisfy w(p) = 0.
  int rank_on_fiber(const Point2& p) const {
    if (const JointRep* j = p.joint(); j && !j->alpha.is_rational()) {
      XEval site{&j->alpha, &j->xq};
      RootWindows wd = compute_root_windows(w_, site, &chain_cache_);
      UniPoly ysheared = j->yq + wd.shear_t * j->xq;
      return window_rank(wd, [&](const Rational& s) {
        return j->sign_param(ysheared - UniPoly::constant(s));
      });
    }
    const AlgebraicReal& px = p.x();
    if (px.is_rational()) {
      auto roots = isolate_real_roots(w_.substitute_x(px.rational_value()));
      for (size_t i = 0; i < roots.size(); ++i)
        if (compare(roots[i], p.y()) == Order::EQ) return static_cast<int>(i);
      throw precondition_error("rank_on_fiber: point not on the curve part");
    }
    // independent algebraic x with rational y
    if (!p.y().is_rational())
      throw precondition_error("rank_on_fiber: unsupported point representation");
    XEval site{&px, nullptr};
    RootWindows wd = compute_root_windows(w_, site, &chain_cache_);
    Rational yv = p.y().rational_value();
    return window_rank(wd, [&](const Rational& s) {
      UniPoly expr = wd.shear_t * UniPoly::identity() + UniPoly::constant(yv - s);
      return px.sign_of(expr);
    });
  }

  // Arc whose relative interior contains p, if any.
  std::optional<int> arc_containing(const Point2& p) const {
    if (!has_curve_part_) return std::nullopt;
    if (p.sign_of(w_) != 0) return std::nullopt;
    auto [is_event, idx] = locate_x(p.x());
    int rank = rank_on_fiber(p);
    if (is_event) {
      const Event& e = events_[idx];
      if (rank < 0 || rank >= static_cast<int>(e.window_point.size())) return std::nullopt;
      if (e.window_point[rank] >= 0) return std::nullopt;  // removed point
      auto it = passthrough_.find({idx, rank});
      if (it == passthrough_.end())
        throw verification_error("arc_containing: missing passthrough record");
      return piece_arc_.at(it->second);
    }
    auto it = piece_arc_.find(piece_key(idx, rank));
    if (it == piece_arc_.end())
      throw verification_error("arc_containing: fiber rank without a branch");
    return it->second;
  }

  // Exact y of the arc at a rational abscissa strictly inside it; x must not
  // be an event of this curve.
  AlgebraicReal y_on_arc(int arc_index, const Rational& x) const {
    const XMonotoneArc& a = arcs_.at(arc_index);
    auto [is_event, idx] = locate_x(AlgebraicReal(x));
    if (is_event) throw precondition_error("y_on_arc: abscissa is an event of the curve");
    for (const auto& pc : a.pieces) {
      if (pc.slab == idx) {
        auto roots = isolate_real_roots(w_.substitute_x(x));
        if (pc.rank >= static_cast<int>(roots.size()))
          throw verification_error("y_on_arc: rank out of range");
        return roots[pc.rank];
      }
    }
    throw precondition_error("y_on_arc: abscissa outside the arc");
  }

  // Rational abscissa of some point strictly inside the slab that contains x
  // (x itself not an event); used to pick certified comparison points.
  const Rational& slab_sample(int slab) const { return slab_samples_.at(slab); }

  std::pair<bool, int> locate_x(const AlgebraicReal& x) const {
    for (size_t i = 0; i < events_.size(); ++i) {
      Order o = compare(x, events_[i].x);
      if (o == Order::EQ) return {true, static_cast<int>(i)};
      if (o == Order::LT) return {false, static_cast<int>(i)};
    }
    return {false, static_cast<int>(events_.size())};
  }

 private:
  struct Event {
    AlgebraicReal x;
    bool vertical_line = false;
    std::vector<int> removed_here;
    RootWindows windows;
    std::vector<int> window_point;  // removed index or -1 per window
    std::vector<int> lcount, rcount;
    int l_down = 0, l_up = 0, r_down = 0, r_up = 0;
  };

  struct Dsu {
    std::vector<int> up;
    int make() {
      up.push_back(static_cast<int>(up.size()));
      return static_cast<int>(up.size()) - 1;
    }
    int find(int a) {
      while (up[a] != a) a = up[a] = up[up[a]];
      return a;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
  };

  long piece_key(int slab, int rank) const { return static_cast<long>(slab) * 4096 + rank; }

  void build() {
    if (v_.degree() >= 1) vxs_ = isolate_real_roots(v_);

    if (has_curve_part_) {
      BiPoly wy = w_.partial_y();
      for (auto& p : intersect_curves(w_, wy)) removed_.push_back({std::move(p), false, false});
      if (!vxs_.empty()) {
        for (auto& p : intersect_curves(BiPoly::from_unipoly_in_x(v_), w_)) {
          bool dup = false;
          for (auto& rp : removed_)
            if (rp.p == p) {
              rp.on_vertical_line = true;
              dup = true;
              break;
            }
          if (!dup) removed_.push_back({std::move(p), false, true});
        }
      }
      collect_events();
      build_slabs();
      for (auto& e : events_) analyze_event(e);
      assemble_arcs();
    }
    build_vertical_segments();
    compute_components();
  }

  void collect_events() {
    std::vector<std::pair<AlgebraicReal, int>> xs;  // (x, removed index or -1)
    for (size_t i = 0; i < removed_.size(); ++i) xs.push_back({removed_[i].p.x(), static_cast<int>(i)});
    UniPoly lcy = w_.leading_y_coeff();
    if (lcy.degree() >= 1)
      for (auto& r : isolate_real_roots(lcy)) xs.push_back({r, -1});
    for (const auto& vx : vxs_) xs.push_back({vx, -1});
    std::sort(xs.begin(), xs.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) == Order::LT; });
    for (auto& [x, ridx] : xs) {
      if (events_.empty() || compare(events_.back().x, x) != Order::EQ) {
        Event e;
        e.x = x;
        events_.push_back(std::move(e));
      }
      if (ridx >= 0) events_.back().removed_here.push_back(ridx);
    }
    for (auto& e : events_)
      for (const auto& vx : vxs_)
        if (compare(e.x, vx) == Order::EQ) e.vertical_line = true;
  }

  void build_slabs() {
    size_t k = events_.size();
    slab_samples_.clear();
    if (k == 0) {
      slab_samples_.push_back(Rational(0));
    } else {
      slab_samples_.push_back(rational_floor(events_.front().x.lo()) - 1);
      for (size_t i = 0; i + 1 < k; ++i)
        slab_samples_.push_back(rational_between(events_[i].x, events_[i + 1].x));
      slab_samples_.push_back(rational_floor(events_.back().x.hi()) + 2);
    }
    branch_count_.clear();
    for (const auto& s : slab_samples_) {
      UniPoly fiber = w_.substitute_x(s);
      branch_count_.push_back(fiber.is_zero() ? 0 : SturmChain(fiber).count_real_roots());
    }
  }

  void analyze_event(Event& e) {
    XEval site{&e.x, nullptr};
    e.windows = compute_root_windows(w_, site, &chain_cache_);
    int m = e.windows.count;
    e.window_point.assign(m, -1);
    for (int ridx : e.removed_here) {
      const JointRep* j = removed_[ridx].p.joint();
      if (!j) throw verification_error("removed point without joint representation");
      UniPoly ysheared = j->yq + e.windows.shear_t * j->xq;
      int rank = window_rank(e.windows, [&](const Rational& s) {
        return j->sign_param(ysheared - UniPoly::constant(s));
      });
      if (rank < 0 || rank >= m) throw verification_error("removed point outside windows");
      e.window_point[rank] = ridx;
    }
    if (e.vertical_line)
      for (int j = 0; j < m; ++j)
        if (e.window_point[j] < 0)
          throw verification_error("unmatched fiber root on a vertical-line event");

    // certified side samples
    const Rational& t = e.windows.shear_t;
    BiPoly wsh = sign(t) == 0 ? w_ : w_.shear_y(-t);
    std::vector<Rational> seps = e.windows.seps;
    if (seps.empty()) seps.push_back(Rational(0));

    std::vector<AlgebraicReal> lbs, ubs;
    for (const auto& s : seps) {
      UniPoly cj = wsh.substitute_y(s);
      if (cj.is_zero()) throw verification_error("separator line contained in curve");
      if (cj.degree() < 1) continue;
      for (auto& r : isolate_real_roots(cj)) {
        Order o = compare(r, e.x);
        if (o == Order::LT) lbs.push_back(r);
        else if (o == Order::GT) ubs.push_back(r);
      }
    }
    int ei = event_index(e);
    if (ei > 0) lbs.push_back(events_[ei - 1].x);
    if (ei + 1 < static_cast<int>(events_.size())) ubs.push_back(events_[ei + 1].x);

    Rational xl, xr;
    if (lbs.empty()) {
      xl = rational_floor(e.x.lo()) - 1;
    } else {
      AlgebraicReal mx = lbs[0];
      for (auto& c : lbs)
        if (compare(c, mx) == Order::GT) mx = c;
      xl = rational_between(mx, e.x);
    }
    if (ubs.empty()) {
      xr = rational_floor(e.x.hi()) + 2;
    } else {
      AlgebraicReal mn = ubs[0];
      for (auto& c : ubs)
        if (compare(c, mn) == Order::LT) mn = c;
      xr = rational_between(e.x, mn);
    }

    auto side_counts = [&](const Rational& xs, std::vector<int>& cnt, int& below, int& above) {
      UniPoly u = wsh.substitute_x(xs);
      cnt.assign(m, 0);
      below = above = 0;
      if (u.is_zero()) throw verification_error("fiber vanished at certified sample");
      if (u.degree() == 0) return;
      SturmChain sc(u);
      below = sc.count_roots_below_eq(seps.front());
      above = sc.count_real_roots() - sc.count_roots_below_eq(seps.back());
      for (int j = 0; j + 1 < static_cast<int>(seps.size()); ++j)
        if (j < m) cnt[j] = sc.count_roots(seps[j], seps[j + 1]);
    };
    side_counts(xl, e.lcount, e.l_down, e.l_up);
    side_counts(xr, e.rcount, e.r_down, e.r_up);

    int lsum = e.l_down + e.l_up, rsum = e.r_down + e.r_up;
    for (int j = 0; j < m; ++j) {
      lsum += e.lcount[j];
      rsum += e.rcount[j];
    }
    if (lsum != branch_count_[ei] || rsum != branch_count_[ei + 1])
      throw verification_error("event adjacency counts do not match slab branch counts");
    for (int j = 0; j < m; ++j)
      if (e.window_point[j] < 0 && (e.lcount[j] != 1 || e.rcount[j] != 1))
        throw verification_error("regular fiber root must continue one branch per side");
  }

  int event_index(const Event& e) const {
    for (size_t i = 0; i < events_.size(); ++i)
      if (&events_[i] == &e) return static_cast<int>(i);
    return -1;
  }

  void assemble_arcs() {
    // piece ids
    std::map<long, int> node_of;
    Dsu dsu;
    for (size_t s = 0; s < branch_count_.size(); ++s)
      for (int r = 0; r < branch_count_[s]; ++r)
        node_of[piece_key(static_cast<int>(s), r)] = dsu.make();

    struct EndRec {
      ArcEnd end;
    };
    std::map<long, ArcEnd> right_end, left_end;
    std::map<std::pair<int, int>, long> passthrough_piece;

    for (size_t ei = 0; ei < events_.size(); ++ei) {
      Event& e = events_[ei];
      int m = e.windows.count;
      int lc = 0, rc = 0;
      for (int r = 0; r < e.l_down; ++r)
        right_end[piece_key(ei, lc++)] = {ArcEnd::Kind::AsymptoteDown, -1};
      for (int r = 0; r < e.r_down; ++r)
        left_end[piece_key(ei + 1, rc++)] = {ArcEnd::Kind::AsymptoteDown, -1};
      for (int j = 0; j < m; ++j) {
        int pidx = e.window_point[j];
        if (pidx >= 0) {
          for (int r = 0; r < e.lcount[j]; ++r) {
            point_incidence_[pidx].push_back(piece_key(ei, lc));
            right_end[piece_key(ei, lc++)] = {ArcEnd::Kind::AtPoint, pidx};
          }
          for (int r = 0; r < e.rcount[j]; ++r) {
            point_incidence_[pidx].push_back(piece_key(ei + 1, rc));
            left_end[piece_key(ei + 1, rc++)] = {ArcEnd::Kind::AtPoint, pidx};
          }
        } else {
          dsu.unite(node_of[piece_key(ei, lc)], node_of[piece_key(ei + 1, rc)]);
          passthrough_piece[{static_cast<int>(ei), j}] = piece_key(ei, lc);
          ++lc;
          ++rc;
        }
      }
      for (int r = 0; r < e.l_up; ++r)
        right_end[piece_key(ei, lc++)] = {ArcEnd::Kind::AsymptoteUp, -1};
      for (int r = 0; r < e.r_up; ++r)
        left_end[piece_key(ei + 1, rc++)] = {ArcEnd::Kind::AsymptoteUp, -1};
    }

    // group pieces into arcs
    std::map<int, std::vector<std::pair<int, int>>> groups;  // dsu root -> (slab, rank)
    for (auto& [key, node] : node_of) {
      int slab = static_cast<int>(key / 4096), rank = static_cast<int>(key % 4096);
      groups[dsu.find(node)].push_back({slab, rank});
    }
    int last_slab = static_cast<int>(branch_count_.size()) - 1;
    for (auto& [root, pieces] : groups) {
      std::sort(pieces.begin(), pieces.end());
      XMonotoneArc arc;
      arc.parent = curve_.id();
      for (auto& [s, r] : pieces) arc.pieces.push_back({s, r});
      auto [s0, r0] = pieces.front();
      auto [s1, r1] = pieces.back();
      if (s0 == 0) {
        arc.x_lo = ExtendedX::neg_inf();
        arc.end_lo = {ArcEnd::Kind::Unbounded, -1};
      } else {
        arc.x_lo = ExtendedX::at(events_[s0 - 1].x);
        arc.end_lo = left_end.at(piece_key(s0, r0));
      }
      if (s1 == last_slab) {
        arc.x_hi = ExtendedX::pos_inf();
        arc.end_hi = {ArcEnd::Kind::Unbounded, -1};
      } else {
        arc.x_hi = ExtendedX::at(events_[s1].x);
        arc.end_hi = right_end.at(piece_key(s1, r1));
      }
      arc.sample_x = slab_samples_[s0];
      arc.branch = r0;
      int arc_index = static_cast<int>(arcs_.size());
      for (auto& [s, r] : pieces) piece_arc_[piece_key(s, r)] = arc_index;
      arcs_.push_back(std::move(arc));
    }
    for (auto& [evwin, key] : passthrough_piece) passthrough_[evwin] = key;

    // isolated removed points: no incident branch and not on a vertical line
    for (size_t i = 0; i < removed_.size(); ++i) {
      auto it = point_incidence_.find(static_cast<int>(i));
      removed_[i].isolated = (it == point_incidence_.end() || it->second.empty()) &&
                             !removed_[i].on_vertical_line;
    }
  }

  void build_vertical_segments() {
    for (const auto& vx : vxs_) {
      std::vector<int> pts;
      for (size_t i = 0; i < removed_.size(); ++i)
        if (compare(removed_[i].p.x(), vx) == Order::EQ) {
          pts.push_back(static_cast<int>(i));
          removed_[i].on_vertical_line = true;
        }
      std::sort(pts.begin(), pts.end(), [&](int a, int b) {
        return compare(removed_[a].p.y(), removed_[b].p.y()) == Order::LT;
      });
      if (pts.empty()) {
        segments_.push_back({vx, std::nullopt, std::nullopt, -1, -1});
        continue;
      }
      segments_.push_back({vx, std::nullopt, removed_[pts.front()].p.y(), -1, pts.front()});
      for (size_t i = 0; i + 1 < pts.size(); ++i)
        segments_.push_back(
            {vx, removed_[pts[i]].p.y(), removed_[pts[i + 1]].p.y(), pts[i], pts[i + 1]});
      segments_.push_back({vx, removed_[pts.back()].p.y(), std::nullopt, pts.back(), -1});
    }
  }

  void compute_components() {
    Dsu dsu;
    int a0 = 0;
    std::vector<int> arc_node(arcs_.size()), pt_node(removed_.size()), seg_node(segments_.size());
    for (auto& n : arc_node) n = dsu.make();
    for (auto& n : pt_node) n = dsu.make();
    for (auto& n : seg_node) n = dsu.make();
    (void)a0;
    for (size_t i = 0; i < arcs_.size(); ++i) {
      if (arcs_[i].end_lo.kind == ArcEnd::Kind::AtPoint)
        dsu.unite(arc_node[i], pt_node[arcs_[i].end_lo.point_index]);
      if (arcs_[i].end_hi.kind == ArcEnd::Kind::AtPoint)
        dsu.unite(arc_node[i], pt_node[arcs_[i].end_hi.point_index]);
    }
    for (size_t i = 0; i < segments_.size(); ++i) {
      if (segments_[i].lo_point >= 0) dsu.unite(seg_node[i], pt_node[segments_[i].lo_point]);
      if (segments_[i].hi_point >= 0) dsu.unite(seg_node[i], pt_node[segments_[i].hi_point]);
    }
    std::vector<int> roots;
    for (int n = 0; n < static_cast<int>(dsu.up.size()); ++n) roots.push_back(dsu.find(n));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    components_ = static_cast<int>(roots.size());
  }

  PlaneCurve curve_;
  UniPoly v_;
  BiPoly w_;
  bool has_curve_part_ = false;
  std::vector<AlgebraicReal> vxs_;
  std::vector<RemovedPoint> removed_;
  std::vector<Event> events_;
  std::vector<Rational> slab_samples_;
  std::vector<int> branch_count_;
  std::vector<XMonotoneArc> arcs_;
  std::vector<VerticalSegment> segments_;
  std::map<long, int> piece_arc_;
  std::map<std::pair<int, int>, long> passthrough_;
  std::map<int, std::vector<long>> point_incidence_;
  int components_ = 0;
  mutable ChainCache chain_cache_;
};

// The spec-facing aggregate of one curve's decomposition.
struct Decomposition {
  std::vector<XMonotoneArc> arcs;
  std::vector<VerticalSegment> vertical_segments;
  std::vector<Point2> removed_points;
};

inline Decomposition decompose(const PlaneCurve& c) {
  CurveAnalysis a(c);
  Decomposition d;
  d.arcs = a.arcs();
  d.vertical_segments = a.vertical_segments();
  for (const auto& rp : a.removed_points()) d.removed_points.push_back(rp.p);
  return d;
}

inline int count_components(const PlaneCurve& c) { return CurveAnalysis(c).component_count(); }

}  // namespace lenscut
