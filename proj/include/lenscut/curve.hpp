#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lenscut/bipoly.hpp"

namespace lenscut {

// Configurable total-degree cap for input curves. Values above 8 are refused:
// eliminant degrees grow quadratically and the exact kernel is tuned for
// desk-scale instances.
inline int& degree_cap() {
  static int cap = 4;
  return cap;
}

inline void set_degree_cap(int d) {
  if (d < 1) throw precondition_error("degree cap must be positive");
  if (d > 8) throw precondition_error("degree cap above 8 is not supported");
  degree_cap() = d;
}

// A plane algebraic curve Z(f) with square-free defining polynomial.
// Non-square-free input is rejected, not repaired.
class PlaneCurve {
 public:
  PlaneCurve(std::string id, BiPoly f) : id_(std::move(id)), f_(std::move(f)) {
    if (f_.is_zero() || f_.is_constant())
      throw precondition_error("curve '" + id_ + "': polynomial must be nonconstant");
    if (f_.total_degree() > degree_cap())
      throw precondition_error("curve '" + id_ + "': degree " +
                               std::to_string(f_.total_degree()) + " exceeds cap " +
                               std::to_string(degree_cap()));
    f_ = f_.normalized();
    if (!(square_free_part_bipoly(f_) == f_))
      throw precondition_error("curve '" + id_ + "': polynomial is not square-free");
    fx_ = f_.partial_x();
    fy_ = f_.partial_y();
  }

  const std::string& id() const { return id_; }
  const BiPoly& f() const { return f_; }
  const BiPoly& fx() const { return fx_; }
  const BiPoly& fy() const { return fy_; }
  int degree() const { return f_.total_degree(); }

 private:
  std::string id_;
  BiPoly f_, fx_, fy_;
};

// Checks the family-wide hypothesis: pairwise no shared component.
inline void check_pairwise_coprime(const std::vector<PlaneCurve>& curves) {
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (share_component(curves[i].f(), curves[j].f()))
        throw precondition_error("curves '" + curves[i].id() + "' and '" + curves[j].id() +
                                 "' share a common component");
}

}  // namespace lenscut
