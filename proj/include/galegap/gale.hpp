#pragma once

// The perturbed Gale family. Primal: minimize sum c_k x_k over finitely
// supported x >= 0 with x_0 + sum_{k>=1} k x_k = b1 and sum_{k>=1} x_k = b2.
// Dual: maximize b1 y1 + b2 y2 over y1 <= c_0 and k y1 + y2 <= c_k (k >= 1).
//
// Costs are specified through the decomposition c_0 = u + beta_0,
// c_k = k u + v + beta_k with beta nonnegative; recovering (u, v, beta) from
// a raw cost sequence is ill-posed and deliberately unsupported.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galegap/detail/envelope2d.hpp"
#include "galegap/numeric.hpp"
#include "galegap/tailseq.hpp"

namespace galegap {

struct CostSpec {
  Ratio u;
  Ratio v;
  TailSeq beta;

  CostSpec(Ratio u_, Ratio v_, TailSeq beta_)
      : u(std::move(u_)), v(std::move(v_)), beta(std::move(beta_)) {
    if (!seq_is_nonneg(beta))
      throw ContractError("CostSpec: beta must be nonnegative at every index");
  }
};

inline Ratio cost_eval(const CostSpec& c, const BigInt& k) {
  if (k.sign() < 0) throw ContractError("cost_eval: negative index");
  if (k.is_zero()) return c.u + c.beta.eval(0);
  return c.u * Ratio(k) + c.v + c.beta.eval(k);
}

inline Ratio cost_c0(const CostSpec& c) { return cost_eval(c, BigInt(0)); }

struct Rhs {
  Ratio b1;
  Ratio b2;
};

// The primal is feasible exactly on { b1 >= b2 >= 0 }; its relative algebraic
// interior is { b1 > b2 > 0 }.
enum class RhsCase { infeasible, origin, axis, edge, interior };

inline RhsCase rhs_classify(const Rhs& b) {
  if (b.b1 < b.b2 || b.b2.sign() < 0) return RhsCase::infeasible;
  if (b.b1.is_zero() && b.b2.is_zero()) return RhsCase::origin;
  if (b.b2.is_zero()) return RhsCase::axis;
  if (b.b1 == b.b2) return RhsCase::edge;
  return RhsCase::interior;
}

inline bool icr_membership(const Rhs& b) {
  return rhs_classify(b) == RhsCase::interior;
}

inline std::string rhs_case_name(RhsCase c) {
  switch (c) {
    case RhsCase::infeasible: return "infeasible";
    case RhsCase::origin: return "origin";
    case RhsCase::axis: return "axis";
    case RhsCase::edge: return "edge";
    case RhsCase::interior: return "interior";
  }
  return "?";
}

struct DualPoint {
  Ratio y1;
  Ratio y2;
  friend bool operator==(const DualPoint&, const DualPoint&) = default;
};

// Membership in the dual feasible set: y1 <= c_0 and, writing q := y1 - u,
// y2 <= v + inf{beta_k - q k : k >= 1}. The comparison is against an
// extended real; a -inf infimum means no admissible y2 at this y1.
inline bool dual_feasible(const CostSpec& c, const DualPoint& y) {
  if (y.y1 > cost_c0(c)) return false;
  const XReal bound = inf_shifted(c.beta, y.y1 - c.u, BigInt(1));
  return XReal(y.y2 - c.v) <= bound;
}

// Conjugate of the primal value function: the indicator of the dual feasible
// set (the cone constraint on y is vacuous here since the equality version
// has dual cone all of R^2).
inline XReal hc_conjugate(const CostSpec& c, const DualPoint& y) {
  return dual_feasible(c, y) ? XReal(Ratio(0)) : XReal::pos_inf();
}

enum class AttainStatus { attained_with_witness, not_attained, unknown };

inline std::string attain_status_name(AttainStatus s) {
  switch (s) {
    case AttainStatus::attained_with_witness: return "attained";
    case AttainStatus::not_attained: return "not-attained";
    case AttainStatus::unknown: return "unknown";
  }
  return "?";
}

struct GapReport {
  XReal phi;            // primal value
  XReal psi;            // dual value (lower enclosure end when inexact)
  XReal gap;            // phi - psi where defined
  bool gap_defined = true;
  XReal beta_bar;       // lim beta_k / k
  XReal u_bar;          // u + min{beta_0, beta_bar}
  AttainStatus attainment = AttainStatus::unknown;
  std::optional<DualPoint> witness;
  RhsCase rhs_case = RhsCase::infeasible;
  // Certified [lo, hi] bracket for psi when the supremum has no exact
  // finite reduction (negative sqrt coefficient with b2 > 0); psi == lo.
  std::optional<std::pair<Ratio, Ratio>> psi_enclosure;
};

// Largest admissible dual point with first coordinate u + beta_prime:
// (u + beta_prime, min{v, v + inf{beta_k - beta_prime k : k >= 1}}).
// Requires beta_prime <= beta_0 and a finite infimum.
inline DualPoint construct_dual_optimal(const CostSpec& c, const Ratio& beta_prime) {
  if (beta_prime > c.beta.eval(0))
    throw ContractError("construct_dual_optimal: beta_prime exceeds beta_0");
  const XReal inf = inf_shifted(c.beta, beta_prime, BigInt(1));
  if (!inf.is_finite())
    throw ContractError(
        "construct_dual_optimal: inf{beta_k - beta_prime*k} is -inf; no feasible "
        "second coordinate exists");
  const Ratio slack = inf.finite_value();
  const Ratio v2 = slack.sign() < 0 ? c.v + slack : c.v;
  return DualPoint{c.u + beta_prime, v2};
}

// Dual attainment on axis right-hand sides b = (b1, 0), b1 > 0:
//   min{beta_0, beta_bar} = 0        -> attained at (u, v)
//   0 < beta_0 < beta_bar            -> attained at u + beta_0
//   beta_0 >= beta_bar > 0           -> attained iff inf{beta_k - beta_bar k}
//                                       is finite, at u + beta_bar
inline std::pair<AttainStatus, std::optional<DualPoint>> dual_optimum_status(
    const CostSpec& c, const Rhs& b) {
  if (rhs_classify(b) != RhsCase::axis)
    throw ContractError("dual_optimum_status: requires b = (b1, 0) with b1 > 0");
  const Ratio beta0 = c.beta.eval(0);
  const Ratio beta_bar = c.beta.tail().slope;
  const Ratio m = std::min(beta0, beta_bar);
  if (m.is_zero())
    return {AttainStatus::attained_with_witness, DualPoint{c.u, c.v}};
  if (beta0 < beta_bar)
    return {AttainStatus::attained_with_witness, construct_dual_optimal(c, beta0)};
  if (inf_shifted(c.beta, beta_bar, BigInt(1)).is_finite())
    return {AttainStatus::attained_with_witness, construct_dual_optimal(c, beta_bar)};
  return {AttainStatus::not_attained, std::nullopt};
}

// Closed forms on the axis: phi = b1 c_0, psi = b1 (u + min{beta_0, beta_bar}),
// gap = b1 max{0, beta_0 - beta_bar}.
inline GapReport gap_closed_form(const CostSpec& c, const Rhs& b) {
  if (rhs_classify(b) != RhsCase::axis)
    throw ContractError(
        "gap_closed_form: requires b = (b1, 0) with b1 > 0; use gap_report for "
        "other right-hand sides");
  const Ratio beta0 = c.beta.eval(0);
  const Ratio beta_bar = c.beta.tail().slope;
  const Ratio u_bar = c.u + std::min(beta0, beta_bar);
  GapReport r;
  r.phi = XReal(b.b1 * cost_c0(c));
  r.psi = XReal(b.b1 * u_bar);
  r.gap = XReal(b.b1 * std::max(Ratio(0), beta0 - beta_bar));
  r.beta_bar = XReal(beta_bar);
  r.u_bar = XReal(u_bar);
  auto [status, witness] = dual_optimum_status(c, b);
  r.attainment = status;
  r.witness = witness;
  r.rhs_case = RhsCase::axis;
  return r;
}

struct DualValue {
  XReal value;  // exact, or the certified lower end of the enclosure
  std::optional<std::pair<Ratio, Ratio>> enclosure;
  std::optional<DualPoint> maximizer;  // feasible point achieving `value`
};

namespace detail {

// Exact reduction for tails with s >= 0: every constraint beyond the first
// tail index is dominated once y1 <= u + a, so the dual collapses to the
// prefix constraints k = 1..max(K,1), the first tail constraint, and the cap
// y1 <= min(c_0, u + a).
inline DualValue dual_sup_exact(const CostSpec& c, const Rhs& b) {
  const std::size_t keff = std::max<std::size_t>(c.beta.prefix_size(), 1);
  std::vector<Line> lines;
  lines.reserve(keff);
  for (std::size_t k = 1; k <= keff; ++k)
    lines.push_back(Line{Ratio(-static_cast<long long>(k)), cost_eval(c, BigInt(k)),
                         static_cast<std::int64_t>(k)});
  const Ratio cap = std::min(cost_c0(c), c.u + c.beta.tail().slope);
  const auto env = lower_envelope(lines);
  const auto best = maximize_over_envelope(env, b.b1, b.b2, cap);
  if (!best.bounded)
    throw ContractError("dual_sup_general: dual objective unbounded");
  return {XReal(best.value), std::nullopt, DualPoint{best.y1, best.y2}};
}

// Certified bracket for tails with s < 0 and b2 > 0. The objective
// f(y1) = b1 y1 + b2 (v + inf{beta_k - (y1 - u) k : k >= 1}) is a pointwise
// infimum of affine functions of y1, hence concave; the reported active index
// at each evaluation yields an affine majorant touching f there. Refining the
// sample where the majorant bracket is largest closes the gap below eps.
inline DualValue dual_sup_enclosure(const CostSpec& c, const Rhs& b, const Ratio& eps) {
  if (eps.sign() <= 0) throw ContractError("dual_sup_general: eps must be positive");

  struct Sample {
    Ratio x;
    Ratio f;
    Ratio t_slope;      // slope of the affine majorant active at x
    Ratio t_intercept;  // f(x) - t_slope * x
  };

  auto evaluate = [&](const Ratio& x) -> Sample {
    const auto inf = inf_shifted_detail(c.beta, x - c.u, BigInt(1));
    const Ratio g = c.v + inf.value.finite_value();
    const Ratio k(*inf.argmin);
    const Ratio slope = b.b1 - b.b2 * k;
    const Ratio f = b.b1 * x + b.b2 * g;
    return Sample{x, f, slope, f - slope * x};
  };

  const Ratio c0 = cost_c0(c);
  const Ratio slope_cap = c.u + c.beta.tail().slope;
  const bool closed = c0 < slope_cap;  // at y1 = u + a the infimum is -inf
  const Ratio right = closed ? c0 : slope_cap;
  const Ratio left = c.u - c.beta.eval(1);  // index 1 is active from here left

  std::vector<Sample> pts;
  pts.push_back(evaluate(left));
  if (closed && right > left) pts.push_back(evaluate(right));
  if (!closed && right > left)
    pts.push_back(evaluate(left + (right - left) * Ratio(1, 2)));

  auto best_lower = [&]() {
    Ratio lo = pts.front().f;
    std::size_t at = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].f > lo) {
        lo = pts[i].f;
        at = i;
      }
    return std::pair<Ratio, std::size_t>(lo, at);
  };

  for (int iter = 0; iter < 10000; ++iter) {
    const auto [lo, lo_at] = best_lower();

    // Upper bound and refinement point per gap between adjacent samples,
    // plus the open right end when the domain is open.
    Ratio hi = lo;
    std::optional<Ratio> refine;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Sample& l = pts[i];
      const Sample& r = pts[i + 1];
      Ratio ub;
      std::optional<Ratio> cross;
      if (l.t_slope.sign() <= 0) {
        ub = l.f;
      } else if (r.t_slope.sign() >= 0) {
        ub = r.f;
      } else {
        const Ratio xc = (r.t_intercept - l.t_intercept) / (l.t_slope - r.t_slope);
        ub = l.t_intercept + l.t_slope * xc;
        if (xc > l.x && xc < r.x) cross = xc;
      }
      if (ub > hi) {
        hi = ub;
        refine = cross;
        if (!refine && ub > lo) {
          const Ratio mid = l.x + (r.x - l.x) * Ratio(1, 2);
          if (mid > l.x && mid < r.x) refine = mid;
        }
      }
    }
    if (!closed) {
      const Sample& last = pts.back();
      if (last.t_slope.sign() > 0) {
        const Ratio ub = last.t_intercept + last.t_slope * right;
        if (ub > hi) {
          hi = ub;
          const Ratio mid = last.x + (right - last.x) * Ratio(1, 2);
          refine = mid > last.x ? std::optional<Ratio>(mid) : std::nullopt;
        }
      }
    }

    if (hi - lo <= eps || !refine) {
      DualValue out;
      out.value = XReal(lo);
      out.enclosure = std::make_pair(lo, hi);
      out.maximizer = DualPoint{
          pts[lo_at].x,
          c.v + inf_shifted(c.beta, pts[lo_at].x - c.u, BigInt(1)).finite_value()};
      return out;
    }

    Sample next = evaluate(*refine);
    auto pos = pts.begin();
    while (pos != pts.end() && pos->x < next.x) ++pos;
    pts.insert(pos, std::move(next));
  }
  throw std::runtime_error("dual_sup_general: enclosure search did not converge");
}

}  // namespace detail

// Value of the dual problem sup{ b1 y1 + b2 y2 : y dual feasible }.
//   axis / origin: exact closed value
//   edge / interior, tail s >= 0: exact finite reduction
//   edge / interior, tail s < 0: certified enclosure of width <= eps
inline DualValue dual_sup_general(const CostSpec& c, const Rhs& b,
                                  const Ratio& eps = Ratio(1, 1000000000)) {
  switch (rhs_classify(b)) {
    case RhsCase::infeasible:
      throw ContractError("dual_sup_general: right-hand side outside b1 >= b2 >= 0");
    case RhsCase::origin:
      return {XReal(Ratio(0)), std::nullopt, DualPoint{c.u, c.v}};
    case RhsCase::axis: {
      const Ratio value =
          b.b1 * std::min(cost_c0(c), c.u + c.beta.tail().slope);
      return {XReal(value), std::nullopt, std::nullopt};
    }
    case RhsCase::edge:
    case RhsCase::interior:
      if (c.beta.tail().sqrt_coef.sign() >= 0) return detail::dual_sup_exact(c, b);
      return detail::dual_sup_enclosure(c, b, eps);
  }
  throw ContractError("dual_sup_general: unreachable");
}

// Total report over all right-hand sides. Infeasible b leaves the primal at
// +inf (empty feasible set) and the dual unbounded (+inf along the recession
// rays (0,-1) or (-1,1)), so the difference is undefined and flagged.
inline GapReport gap_report(const CostSpec& c, const Rhs& b,
                            const Ratio& eps = Ratio(1, 1000000000)) {
  const RhsCase cls = rhs_classify(b);
  const Ratio beta0 = c.beta.eval(0);
  const Ratio beta_bar = c.beta.tail().slope;

  GapReport r;
  r.beta_bar = XReal(beta_bar);
  r.u_bar = XReal(c.u + std::min(beta0, beta_bar));
  r.rhs_case = cls;

  switch (cls) {
    case RhsCase::infeasible:
      r.phi = XReal::pos_inf();
      r.psi = XReal::pos_inf();
      r.gap = XReal::pos_inf();
      r.gap_defined = false;
      r.attainment = AttainStatus::not_attained;
      return r;
    case RhsCase::origin:
      r.phi = r.psi = r.gap = XReal(Ratio(0));
      r.attainment = AttainStatus::attained_with_witness;
      r.witness = DualPoint{c.u, c.v};
      return r;
    case RhsCase::axis:
      return gap_closed_form(c, b);
    case RhsCase::edge: {
      const DualValue dv = dual_sup_general(c, b, eps);
      r.phi = XReal(b.b1 * cost_eval(c, BigInt(1)));  // feasible set is {b1 e_1}
      r.psi = dv.value;
      r.gap = r.phi - r.psi;
      r.psi_enclosure = dv.enclosure;
      if (dv.enclosure) {
        r.attainment = AttainStatus::unknown;
      } else {
        r.attainment = AttainStatus::attained_with_witness;
        r.witness = dv.maximizer;
      }
      return r;
    }
    case RhsCase::interior: {
      const DualValue dv = dual_sup_general(c, b, eps);
      r.psi = dv.value;
      r.phi = dv.value;  // zero gap in the relative algebraic interior
      r.gap = XReal(Ratio(0));
      r.psi_enclosure = dv.enclosure;
      if (dv.enclosure) {
        r.attainment = AttainStatus::unknown;
      } else {
        r.attainment = AttainStatus::attained_with_witness;
        r.witness = dv.maximizer;
      }
      return r;
    }
  }
  throw ContractError("gap_report: unreachable");
}

}  // namespace galegap
