#pragma once

// Van Slyke-Wets epigraph sets for the classic semi-infinite program:
// membership predicates for C0, C1, C' = C0 u C1 and cl C', the vertical
// line L = {(eta, 0, 0)}, the explicit two-support witness certifying
// C1 membership, and sequence fixtures with exact (or certified-interval)
// partial sums.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galegap/numeric.hpp"

namespace galegap {

struct EtaPoint {
  Ratio eta;
  Ratio y1;
  Ratio y2;
};

inline bool in_C0(const EtaPoint& p) {
  return p.y2.is_zero() && p.y1 <= Ratio(1) && p.eta >= Ratio(1) - p.y1;
}

inline bool in_C1(const EtaPoint& p) {
  return p.y1 - Ratio(1) <= p.y2 && p.y2.sign() < 0 && p.eta.sign() >= 0;
}

inline bool in_Cprime(const EtaPoint& p) { return in_C0(p) || in_C1(p); }

inline bool in_cl_Cprime(const EtaPoint& p) {
  return p.y1 - Ratio(1) <= p.y2 && p.y2.sign() <= 0 && p.eta.sign() >= 0;
}

inline bool on_line(const EtaPoint& p) { return p.y1.is_zero() && p.y2.is_zero(); }

// L n C' = {(eta,0,0) : eta >= 1}; the closure of C' drops the bound to 0.
inline bool in_line_cap_Cprime(const EtaPoint& p) {
  return on_line(p) && p.eta >= Ratio(1);
}
inline bool in_line_cap_cl_Cprime(const EtaPoint& p) {
  return on_line(p) && p.eta.sign() >= 0;
}

struct LineIntersectionReport {
  std::string cap_cprime;     // machine-checkable characterization of L n C'
  std::string cap_cl_cprime;  // ... and of L n cl C'
};

inline LineIntersectionReport line_intersections() {
  return {"y1 = 0 and y2 = 0 and eta >= 1", "y1 = 0 and y2 = 0 and eta >= 0"};
}

// Confirms the two characterizations against the raw membership predicates on
// the rational grid {lo, lo+step, ..., hi}^3.
inline bool verify_line_intersections(const Ratio& lo, const Ratio& hi, const Ratio& step) {
  if (step.sign() <= 0) throw ContractError("verify_line_intersections: step must be > 0");
  for (Ratio eta = lo; eta <= hi; eta += step)
    for (Ratio y1 = lo; y1 <= hi; y1 += step)
      for (Ratio y2 = lo; y2 <= hi; y2 += step) {
        const EtaPoint p{eta, y1, y2};
        if (in_line_cap_Cprime(p) != (on_line(p) && in_Cprime(p))) return false;
        if (in_line_cap_cl_Cprime(p) != (on_line(p) && in_cl_Cprime(p))) return false;
      }
  return true;
}

using SparseSeq = std::vector<std::pair<std::int64_t, Ratio>>;

// Two-support certificate for p in C1. With alpha := 1 - y1 and
// beta := -y2 (alpha >= beta > 0), pick nbar := max{2, ceil(alpha/beta)} and
//   x_1 = (nbar*beta - alpha)/(nbar - 1),  x_nbar = (alpha - beta)/(nbar - 1);
// then x >= 0, sum x_n = beta and sum n x_n = alpha exactly. Zero entries are
// dropped from the returned support.
inline SparseSeq c1_witness(const EtaPoint& p) {
  if (!in_C1(p)) throw ContractError("c1_witness: point is not in C1");
  const Ratio alpha = Ratio(1) - p.y1;
  const Ratio beta = -p.y2;
  BigInt nbar = (alpha / beta).ceil();
  if (nbar < 2) nbar = 2;
  if (nbar > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw ContractError("c1_witness: support index exceeds the representable range");
  const Ratio nbar_r(nbar);
  const Ratio den = nbar_r - Ratio(1);
  const Ratio x1 = (nbar_r * beta - alpha) / den;
  const Ratio xn = (alpha - beta) / den;
  SparseSeq out;
  if (x1.sign() > 0) out.emplace_back(1, x1);
  if (xn.sign() > 0) out.emplace_back(nbar.convert_to<std::int64_t>(), xn);
  return out;
}

// ---- sequence fixtures ------------------------------------------------

struct RatInterval {
  Ratio lo;
  Ratio hi;
  bool contains(const Ratio& x) const { return lo <= x && x <= hi; }
  Ratio width() const { return hi - lo; }
};

inline RatInterval exact_interval(const Ratio& x) { return {x, x}; }

namespace detail {

// 2*atanh((m-1)/(m+1)) = ln m for m in [1, 2]; the tail after J terms is
// bounded by 2 t^(2J+1) / ((2J+1)(1 - t^2)) with t <= 1/3.
inline RatInterval ln_series_interval(const Ratio& m) {
  const Ratio t = (m - Ratio(1)) / (m + Ratio(1));
  constexpr int kTerms = 24;
  Ratio sum(0);
  Ratio power = t;  // t^(2j+1)
  const Ratio t2 = t * t;
  for (int j = 0; j < kTerms; ++j) {
    sum += power / Ratio(2 * j + 1);
    power *= t2;
  }
  const Ratio lo = Ratio(2) * sum;
  if (t.is_zero()) return {lo, lo};
  const Ratio rem = Ratio(2) * power / (Ratio(2 * kTerms + 1) * (Ratio(1) - t2));
  return {lo, lo + rem};
}

}  // namespace detail

// Certified rational bounds for ln n, n >= 1.
inline RatInterval ln_interval(std::int64_t n) {
  if (n < 1) throw ContractError("ln_interval: n must be >= 1");
  int exp = 0;
  std::int64_t m = n;
  while (m >= 2) {
    m /= 2;
    ++exp;
  }
  // n / 2^exp lies in [1, 2)
  const Ratio mantissa(BigInt(n), BigInt(1) << exp);
  const RatInterval ln2 = detail::ln_series_interval(Ratio(2));
  const RatInterval lnm = detail::ln_series_interval(mantissa);
  return {Ratio(exp) * ln2.lo + lnm.lo, Ratio(exp) * ln2.hi + lnm.hi};
}

enum class DspaceFixture {
  geometric,        // z_n = 2^-n
  alt_inv_square,   // z_n = (-1)^n / (n+1)^2
  harmonic,         // z_n = 1 / (n+1)
  alt_harmonic,     // z_n = (-1)^n / (n+1)
  log_alternating,  // z_0 = z_1 = 0, z_n = (-1)^n / (n ln n)
};

inline DspaceFixture dspace_fixture_from_name(std::string_view name) {
  if (name == "geometric") return DspaceFixture::geometric;
  if (name == "alt-inv-square") return DspaceFixture::alt_inv_square;
  if (name == "harmonic") return DspaceFixture::harmonic;
  if (name == "alt-harmonic") return DspaceFixture::alt_harmonic;
  if (name == "log-alternating") return DspaceFixture::log_alternating;
  throw ContractError("unknown fixture: '" + std::string(name) + "'");
}

struct DspacePartialSums {
  RatInterval weighted;  // sum_{n<=N} n * z_n
  RatInterval absolute;  // sum_{n<=N} |z_n|
  std::string label;     // known classification, carried as a label only
};

// Exact partial sums (certified intervals for the logarithmic fixture). These
// confirm trends against known closed forms; no convergence is decided here.
inline DspacePartialSums dspace_fixture_partial_sums(DspaceFixture fixture,
                                                     std::int64_t n_max) {
  if (n_max < 1) throw ContractError("dspace_fixture_partial_sums: N must be >= 1");
  DspacePartialSums out;
  switch (fixture) {
    case DspaceFixture::geometric: {
      Ratio w(0), a(0);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        const Ratio z(BigInt(1), BigInt(1) << n);
        w += Ratio(n) * z;
        a += z;
      }
      out = {exact_interval(w), exact_interval(a), "weighted-sum-absolutely-convergent"};
      return out;
    }
    case DspaceFixture::alt_inv_square: {
      Ratio w(0), a(0);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        const Ratio mag(BigInt(1), BigInt(n + 1) * BigInt(n + 1));
        w += (n % 2 == 0 ? Ratio(n) * mag : -(Ratio(n) * mag));
        a += mag;
      }
      out = {exact_interval(w), exact_interval(a), "weighted-sum-conditionally-convergent"};
      return out;
    }
    case DspaceFixture::harmonic: {
      Ratio w(0), a(0);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        const Ratio z(BigInt(1), BigInt(n + 1));
        w += Ratio(n) * z;
        a += z;
      }
      out = {exact_interval(w), exact_interval(a), "not-absolutely-summable"};
      return out;
    }
    case DspaceFixture::alt_harmonic: {
      Ratio w(0), a(0);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        const Ratio mag(BigInt(1), BigInt(n + 1));
        w += (n % 2 == 0 ? Ratio(n) * mag : -(Ratio(n) * mag));
        a += mag;
      }
      out = {exact_interval(w), exact_interval(a), "summable-but-weighted-sum-divergent"};
      return out;
    }
    case DspaceFixture::log_alternating: {
      RatInterval w{Ratio(0), Ratio(0)};
      RatInterval a{Ratio(0), Ratio(0)};
      for (std::int64_t n = 2; n <= n_max; ++n) {
        const RatInterval ln_n = ln_interval(n);
        // n * z_n = (-1)^n / ln n; |z_n| = 1 / (n ln n)
        const RatInterval wt = n % 2 == 0
                                   ? RatInterval{Ratio(1) / ln_n.hi, Ratio(1) / ln_n.lo}
                                   : RatInterval{-(Ratio(1) / ln_n.lo), -(Ratio(1) / ln_n.hi)};
        w = {w.lo + wt.lo, w.hi + wt.hi};
        a = {a.lo + Ratio(1) / (Ratio(n) * ln_n.hi), a.hi + Ratio(1) / (Ratio(n) * ln_n.lo)};
      }
      out = {w, a, "weighted-sum-convergent-but-not-absolutely-summable"};
      return out;
    }
  }
  throw ContractError("dspace_fixture_partial_sums: unreachable");
}

}  // namespace galegap
