#pragma once

// Exact two-variable LP support: the feasible sets handled here are of the
// form { (y1, y2) : y2 <= c_i + sigma_i * y1 for all i, y1 <= cap }, i.e. the
// hypograph of a lower envelope of lines intersected with a vertical
// halfplane. Maximization of w1*y1 + w2*y2 with w2 >= 0 reduces to a walk
// over the envelope pieces.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "galegap/numeric.hpp"

namespace galegap::detail {

struct Line {
  Ratio slope;
  Ratio intercept;
  std::int64_t id = 0;

  Ratio at(const Ratio& x) const { return intercept + slope * x; }
};

struct EnvelopePiece {
  Line line;
  XReal start;  // piece is active on [start, next piece's start)
};

// Lower envelope of lines with strictly decreasing slopes (input order).
inline std::vector<EnvelopePiece> lower_envelope(const std::vector<Line>& lines) {
  std::vector<EnvelopePiece> env;
  for (const Line& ln : lines) {
    while (!env.empty()) {
      const EnvelopePiece& top = env.back();
      // top.slope > ln.slope, so the crossing is unique.
      Ratio x = (ln.intercept - top.line.intercept) / (top.line.slope - ln.slope);
      if (top.start.is_finite() && XReal(x) <= top.start) {
        env.pop_back();
        continue;
      }
      env.push_back({ln, XReal(x)});
      break;
    }
    if (env.empty()) env.push_back({ln, XReal::neg_inf()});
  }
  return env;
}

inline Ratio envelope_value(const std::vector<EnvelopePiece>& env, const Ratio& x) {
  // Last piece whose start is <= x.
  std::size_t lo = 0, hi = env.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (env[mid].start <= XReal(x))
      lo = mid;
    else
      hi = mid;
  }
  return env[lo].line.at(x);
}

struct EnvelopeMaxResult {
  bool bounded = true;
  Ratio value;
  Ratio y1, y2;  // attaining point when bounded
};

// max w1*y1 + w2*env(y1) over y1 <= cap, with w2 >= 0. Ties between equal
// candidates resolve to the leftmost y1 encountered first.
inline EnvelopeMaxResult maximize_over_envelope(const std::vector<EnvelopePiece>& env,
                                                const Ratio& w1, const Ratio& w2,
                                                const Ratio& cap) {
  if (w2.sign() < 0) throw std::domain_error("maximize_over_envelope: w2 < 0");
  if (env.empty()) throw std::domain_error("maximize_over_envelope: empty envelope");

  EnvelopeMaxResult result;
  if (w2.sign() == 0) {
    if (w1.sign() < 0) return {false, {}, {}, {}};  // y1 -> -inf improves
    result.y1 = cap;
    result.y2 = envelope_value(env, cap);
    result.value = w1 * cap;
    return result;
  }

  bool have = false;
  auto consider = [&](const Ratio& y1) {
    const Ratio y2 = envelope_value(env, y1);
    const Ratio val = w1 * y1 + w2 * y2;
    if (!have || val > result.value) {
      have = true;
      result.value = val;
      result.y1 = y1;
      result.y2 = y2;
    }
  };

  for (std::size_t i = 0; i < env.size(); ++i) {
    const Ratio slope = w1 + w2 * env[i].line.slope;
    const XReal& lo = env[i].start;
    const XReal hi = i + 1 < env.size() ? env[i + 1].start : XReal::pos_inf();
    if (lo.is_finite() && lo.finite_value() > cap) break;
    if (slope.sign() > 0) {
      consider(hi.is_finite() && hi.finite_value() <= cap ? hi.finite_value() : cap);
    } else {
      if (!lo.is_finite()) {
        if (slope.sign() < 0) return {false, {}, {}, {}};  // increases toward -inf
        consider(hi.is_finite() && hi.finite_value() <= cap ? hi.finite_value() : cap);
      } else {
        consider(lo.finite_value());
      }
    }
  }
  return result;
}

}  // namespace galegap::detail
