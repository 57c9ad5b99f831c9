#pragma once

// A finite-dimensional conic program with a positive duality gap on the
// boundary of its feasibility cone. Primal data: minimize x2 over
// (x1, x2) in R x R+ with (x1 - y1, x2 - y2, -y3) in the rotated cone
// { (z1, z2, z3) : z1, z3 >= 0, z2^2 <= 2 z1 z3 }. The value function has
// the closed form
//   h0(y) = y2  on R x R+ x {0},   h0(y) = 0  for y3 < 0,   +inf elsewhere,
// while its biconjugate vanishes on the whole halfspace y3 <= 0.

#include <optional>
#include <utility>

#include "galegap/numeric.hpp"

namespace galegap {

struct Point3 {
  Ratio y1;
  Ratio y2;
  Ratio y3;
};

struct PrimalPoint2 {
  Ratio x1;
  Ratio x2;  // >= 0 for any point produced as a witness
};

inline XReal h0_closed(const Point3& y) {
  if (y.y3.sign() < 0) return XReal(Ratio(0));
  if (y.y3.sign() == 0 && y.y2.sign() >= 0) return XReal(y.y2);
  return XReal::pos_inf();
}

// Exact membership test for the shifted cone constraint together with
// x in R x R+.
inline bool soc_feasible(const PrimalPoint2& x, const Point3& y) {
  if (x.x2.sign() < 0) return false;
  const Ratio z1 = x.x1 - y.y1;
  const Ratio z2 = x.x2 - y.y2;
  const Ratio z3 = -y.y3;
  if (z1.sign() < 0 || z3.sign() < 0) return false;
  return z2 * z2 <= Ratio(2) * z1 * z3;
}

// Feasible point attaining h0 when the value is finite. On the slice y3 = 0
// the cone forces x2 = y2 exactly; for y3 < 0 the point (y1 + y2^2/(-2 y3), 0)
// sits on the cone boundary with x2 = 0.
inline std::optional<std::pair<PrimalPoint2, XReal>> h0_witness(const Point3& y) {
  if (y.y3.sign() > 0) return std::nullopt;
  if (y.y3.sign() == 0) {
    if (y.y2.sign() < 0) return std::nullopt;
    return std::make_pair(PrimalPoint2{y.y1, y.y2}, XReal(y.y2));
  }
  const Ratio x1 =
      y.y2.is_zero() ? y.y1 : y.y1 + y.y2 * y.y2 / (Ratio(-2) * y.y3);
  return std::make_pair(PrimalPoint2{x1, Ratio(0)}, XReal(Ratio(0)));
}

struct ExzTriple {
  XReal phi;
  XReal psi;
  XReal gap;
};

// (phi, psi, gap) on the closure of the domain. psi is the biconjugate value,
// identically 0 on y3 <= 0: the affine minorants of h0 are exactly
// alpha * y3 + gamma with alpha >= 0, gamma <= 0.
inline ExzTriple gap_exz(const Point3& y) {
  if (y.y3.sign() > 0)
    throw ContractError("gap_exz: requires y3 <= 0 (closure of the domain)");
  const XReal phi = h0_closed(y);
  const XReal psi = XReal(Ratio(0));
  return {phi, psi, phi - psi};
}

}  // namespace galegap
