#pragma once

// Independent exact oracles: finite truncations of the primal (variables
// x_0..x_N) and of the dual (constraints k = 0..N), solved by exhaustive
// support enumeration and exact envelope maximization respectively. Used to
// cross-check the closed forms and to exhibit the semi-infinite gap as a
// failure of the truncated dual values to converge.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galegap/detail/envelope2d.hpp"
#include "galegap/gale.hpp"
#include "galegap/numeric.hpp"

namespace galegap {

using SparseVec = std::vector<std::pair<std::int64_t, Ratio>>;

struct TruncPrimal {
  std::int64_t n;            // largest variable index
  std::vector<Ratio> cost;   // c_0..c_N
  Rhs rhs;
};

struct TruncDual {
  std::int64_t n;            // largest constraint index
  std::vector<Ratio> cost;   // c_0..c_N
  Rhs rhs;
};

namespace detail {
inline std::vector<Ratio> cost_prefix(const CostSpec& c, std::int64_t n) {
  if (n < 1) throw ContractError("truncation: N must be >= 1");
  std::vector<Ratio> cost;
  cost.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 0; k <= n; ++k) cost.push_back(cost_eval(c, BigInt(k)));
  return cost;
}
}  // namespace detail

inline TruncPrimal make_trunc_primal(const CostSpec& c, const Rhs& b, std::int64_t n) {
  return TruncPrimal{n, detail::cost_prefix(c, n), b};
}
inline TruncDual make_trunc_dual(const CostSpec& c, const Rhs& b, std::int64_t n) {
  return TruncDual{n, detail::cost_prefix(c, n), b};
}

enum class LpStatus { optimal, unbounded, infeasible };

inline std::string lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "?";
}

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  XReal value;                            // +inf for an infeasible minimum,
                                          // +inf for an unbounded maximum
  SparseVec primal_witness;               // nonzero entries, sorted by index
  std::optional<DualPoint> dual_witness;
  std::optional<DualPoint> dual_ray;      // recession certificate
};

namespace detail {

struct PrimalCandidate {
  Ratio value;
  SparseVec sol;
};

// Lexicographic order on the nonzero supports; deterministic tie-break.
inline bool support_less(const SparseVec& a, const SparseVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
  }
  return a.size() < b.size();
}

class PrimalEnumerator {
 public:
  explicit PrimalEnumerator(const TruncPrimal& p) : p_(p) {}

  // Basic solution with support {j} or {j, k}; entries must satisfy both
  // rows already, so only nonnegativity is checked here.
  void offer(std::initializer_list<std::pair<std::int64_t, Ratio>> entries) {
    SparseVec sol;
    Ratio value(0);
    for (const auto& [idx, val] : entries) {
      if (val.sign() < 0) return;  // infeasible basic solution
      if (val.sign() > 0) {
        sol.emplace_back(idx, val);
        value += p_.cost[static_cast<std::size_t>(idx)] * val;
      }
    }
    if (!best_ || value < best_->value ||
        (value == best_->value && support_less(sol, best_->sol)))
      best_ = PrimalCandidate{std::move(value), std::move(sol)};
  }

  void try_pair(std::int64_t j, std::int64_t k) {
    const Ratio& b1 = p_.rhs.b1;
    const Ratio& b2 = p_.rhs.b2;
    if (j == 0) {
      // x_0 + k x_k = b1, x_k = b2
      offer({{0, b1 - Ratio(k) * b2}, {k, b2}});
    } else {
      // j x_j + k x_k = b1, x_j + x_k = b2
      const Ratio det(k - j);
      offer({{j, (Ratio(k) * b2 - b1) / det}, {k, (b1 - Ratio(j) * b2) / det}});
    }
  }

  void try_singletons() {
    const Ratio& b1 = p_.rhs.b1;
    const Ratio& b2 = p_.rhs.b2;
    if (b2.is_zero()) offer({{0, b1}});
    for (std::int64_t k = 1; k <= p_.n; ++k)
      if (b1 == Ratio(k) * b2) offer({{k, b2}});
    if (b1.is_zero() && b2.is_zero()) offer({});
  }

  std::optional<PrimalCandidate> take() { return std::move(best_); }

 private:
  const TruncPrimal& p_;
  std::optional<PrimalCandidate> best_;
};

}  // namespace detail

// Exact minimum of the truncated primal via enumeration of supports of size
// <= 2 (two equality rows, so basic feasible solutions have at most two
// nonzero entries). Ties resolve to the lexicographically smallest support.
// Unboundedness cannot occur: any two columns of the 2-row matrix are
// linearly independent ((1,0) vs (k,1), and (j,1) vs (k,1) with j != k), so
// no nonzero recession direction with support <= 2 exists, and row two kills
// every larger-support direction d >= 0 as well.
//
// When the tail is affine (s = 0) and b2 > 0, every feasible basic solution
// supported on two tail indices has the same objective
//   (u + a) b1 + (v + b_tail) b2,
// because the cost is an affine function of the column. The enumeration then
// restricts to supports touching {0} or the prefix plus the lexicographically
// smallest feasible tail pairs, which preserves both the optimum and the
// tie-break winner; the full quadratic scan remains in place for every other
// shape. The equivalence of the two paths is property-tested.
inline LpOutcome solve_trunc_primal(const CostSpec& c, const Rhs& b, std::int64_t n) {
  const TruncPrimal p = make_trunc_primal(c, b, n);
  detail::PrimalEnumerator en(p);
  en.try_singletons();
  for (std::int64_t k = 1; k <= p.n; ++k) en.try_pair(0, k);

  const auto big_k = static_cast<std::int64_t>(c.beta.prefix_size());
  const std::int64_t first_tail = std::max<std::int64_t>(big_k, 1);
  const bool collapse_tail = c.beta.tail().sqrt_coef.is_zero() &&
                             b.b2.sign() > 0 && p.n > std::max<std::int64_t>(64, 4 * big_k);
  if (collapse_tail) {
    for (std::int64_t j = 1; j < first_tail; ++j)
      for (std::int64_t k = j + 1; k <= p.n; ++k) en.try_pair(j, k);
    const BigInt ratio_ceil = (b.b1 / b.b2).ceil();
    std::int64_t k_star = first_tail + 1;
    if (ratio_ceil > BigInt(p.n))
      k_star = p.n + 1;  // no feasible tail pair; candidates filter out below
    else if (ratio_ceil > BigInt(k_star))
      k_star = ratio_ceil.convert_to<std::int64_t>();
    for (std::int64_t k : {k_star, k_star + 1})
      if (first_tail < k && k <= p.n) en.try_pair(first_tail, k);
  } else {
    for (std::int64_t j = 1; j < p.n; ++j)
      for (std::int64_t k = j + 1; k <= p.n; ++k) en.try_pair(j, k);
  }

  LpOutcome out;
  if (auto best = en.take()) {
    out.status = LpStatus::optimal;
    out.value = XReal(best->value);
    out.primal_witness = std::move(best->sol);
  } else {
    out.status = LpStatus::infeasible;
    out.value = XReal::pos_inf();  // inf over the empty set
  }
  return out;
}

// Exact maximum of the truncated dual: max b1 y1 + b2 y2 subject to
// y1 <= c_0 and k y1 + y2 <= c_k for k = 1..N. The feasible set is the
// hypograph of the lower envelope of the constraint lines capped at
// y1 <= c_0; its recession cone is generated by (0,-1) and (-1,1)
// independently of N, which yields the unboundedness certificates.
inline LpOutcome solve_trunc_dual(const CostSpec& c, const Rhs& b, std::int64_t n) {
  const TruncDual d = make_trunc_dual(c, b, n);
  LpOutcome out;
  if (b.b2.sign() < 0) {
    out.status = LpStatus::unbounded;
    out.value = XReal::pos_inf();
    out.dual_ray = DualPoint{Ratio(0), Ratio(-1)};
    return out;
  }
  if (b.b2 > b.b1) {
    out.status = LpStatus::unbounded;
    out.value = XReal::pos_inf();
    out.dual_ray = DualPoint{Ratio(-1), Ratio(1)};
    return out;
  }

  std::vector<detail::Line> lines;
  lines.reserve(static_cast<std::size_t>(d.n));
  for (std::int64_t k = 1; k <= d.n; ++k)
    lines.push_back(detail::Line{Ratio(-k), d.cost[static_cast<std::size_t>(k)], k});
  const auto env = detail::lower_envelope(lines);
  const auto best = detail::maximize_over_envelope(env, b.b1, b.b2, d.cost[0]);
  if (!best.bounded) {
    out.status = LpStatus::unbounded;  // b1 < 0 with b2 = 0
    out.value = XReal::pos_inf();
    out.dual_ray = DualPoint{Ratio(-1), Ratio(1)};
    return out;
  }
  out.status = LpStatus::optimal;
  out.value = XReal(best.value);
  out.dual_witness = DualPoint{best.y1, best.y2};
  return out;
}

struct SweepRow {
  std::int64_t n;
  XReal primal;
  XReal dual;
};

// One primal/dual truncation pair per N. Restricting a minimum raises it and
// relaxing a supremum raises it, so both columns are nonincreasing in N and
// bound the semi-infinite values from above.
inline std::vector<SweepRow> truncation_sweep(const CostSpec& c, const Rhs& b,
                                              const std::vector<std::int64_t>& ns) {
  if (ns.empty()) throw ContractError("truncation_sweep: empty N list");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1])
      throw ContractError("truncation_sweep: N list must be strictly increasing");
  std::vector<SweepRow> rows;
  rows.reserve(ns.size());
  for (std::int64_t n : ns)
    rows.push_back({n, solve_trunc_primal(c, b, n).value, solve_trunc_dual(c, b, n).value});
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "N,primal,dual\n";
  for (const SweepRow& r : rows)
    os << r.n << "," << r.primal.str() << "," << r.dual.str() << "\n";
  return os.str();
}

}  // namespace galegap
