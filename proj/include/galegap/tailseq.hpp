#pragma once

// Sequences beta = (beta_k) given by a finite prefix of rationals plus the
// asymptotic tail beta_k = a*k + b + s*floor(sqrt(k)). The class is closed
// under the two queries the dual analysis needs, both computed exactly:
//
//   * lim beta_k / k               (equals the tail slope a)
//   * inf{beta_k - q*k : k >= k0}  (block analysis on m = floor(sqrt(k)))
//
// Arbitrary rules are rejected at parse time; the limit inferior is not
// computable for general input.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galegap/numeric.hpp"

namespace galegap {

struct TailRule {
  Ratio slope;      // a
  Ratio offset;     // b
  Ratio sqrt_coef;  // s
};

class TailSeq {
 public:
  TailSeq(std::vector<Ratio> prefix, TailRule tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

  // K: the tail formula applies from index K on. K = 0 means pure tail.
  std::size_t prefix_size() const noexcept { return prefix_.size(); }
  const std::vector<Ratio>& prefix() const noexcept { return prefix_; }
  const TailRule& tail() const noexcept { return tail_; }

  Ratio eval(const BigInt& k) const {
    if (k.sign() < 0) throw ContractError("TailSeq: negative index");
    if (k < BigInt(prefix_.size()))
      return prefix_[static_cast<std::size_t>(k)];
    return tail_.slope * Ratio(k) + tail_.offset + tail_.sqrt_coef * Ratio(isqrt(k));
  }

  // "prefix=[r0,r1,...]; tail=(a,b,s)"
  std::string str() const {
    std::string out = "prefix=[";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (i) out += ",";
      out += prefix_[i].str();
    }
    out += "]; tail=(" + tail_.slope.str() + "," + tail_.offset.str() + "," +
           tail_.sqrt_coef.str() + ")";
    return out;
  }

  static TailSeq parse(std::string_view text);

 private:
  std::vector<Ratio> prefix_;
  TailRule tail_;
};

// lim beta_k / k. Always finite for this representation class: beta_k/k =
// a + b/k + s*floor(sqrt(k))/k -> a, so the limit inferior is the limit.
inline XReal liminf_ratio(const TailSeq& seq) { return XReal(seq.tail().slope); }

struct InfShiftedResult {
  XReal value;
  std::optional<BigInt> argmin;  // smallest minimizing index; set iff finite
};

// inf{beta_k - shift*k : k >= k_min}, exactly. Writing d := a - shift, the
// tail term is T(k) = d*k + s*floor(sqrt(k)) + b:
//   d < 0, or d = 0 with s < 0      -> -inf
//   d = 0, s >= 0                   -> minimum at the first tail index
//   d > 0, s >= 0                   -> T increasing, minimum at first index
//   d > 0, s < 0                    -> per block m = floor(sqrt(k)) the
//     minimum sits at k = m^2, and f(m) = d*m^2 + s*m + b is a convex
//     quadratic minimized near m = -s/(2d); scan the adjacent integers,
//     clipped to valid blocks, plus the clipped first block.
// Prefix entries with k_min <= k < K enter the comparison directly.
inline InfShiftedResult inf_shifted_detail(const TailSeq& seq, const Ratio& shift,
                                           const BigInt& k_min) {
  if (k_min < 1)
    throw ContractError("inf_shifted: k_min must be >= 1 (index 0 is handled separately)");

  const BigInt big_k(seq.prefix_size());
  const BigInt first_tail = k_min > big_k ? k_min : big_k;  // max(K, k_min)
  const Ratio& a = seq.tail().slope;
  const Ratio& b = seq.tail().offset;
  const Ratio& s = seq.tail().sqrt_coef;
  const Ratio d = a - shift;

  if (d.sign() < 0 || (d.sign() == 0 && s.sign() < 0))
    return {XReal::neg_inf(), std::nullopt};

  std::vector<std::pair<Ratio, BigInt>> candidates;
  for (BigInt k = k_min; k < big_k; ++k)
    candidates.emplace_back(seq.eval(k) - shift * Ratio(k), k);

  auto tail_term = [&](const BigInt& k) {
    return d * Ratio(k) + s * Ratio(isqrt(k)) + b;
  };

  candidates.emplace_back(tail_term(first_tail), first_tail);
  if (d.sign() > 0 && s.sign() < 0) {
    const BigInt m_first = isqrt(first_tail) + 1;  // first complete block
    const Ratio m_star = -s / (Ratio(2) * d);
    auto block_candidate = [&](const BigInt& m) {
      if (m >= m_first)
        candidates.emplace_back(d * Ratio(m * m) + s * Ratio(m) + b, m * m);
    };
    block_candidate(m_first);
    BigInt lo = m_star.floor() - 1;
    if (lo < m_first) lo = m_first;
    for (BigInt m = lo; m <= m_star.ceil() + 1; ++m) block_candidate(m);
  }

  std::pair<Ratio, BigInt> best = candidates.front();
  for (const auto& cand : candidates)
    if (cand.first < best.first || (cand.first == best.first && cand.second < best.second))
      best = cand;
  return {XReal(best.first), best.second};
}

inline XReal inf_shifted(const TailSeq& seq, const Ratio& shift, const BigInt& k_min) {
  return inf_shifted_detail(seq, shift, k_min).value;
}

// True iff beta_k >= 0 for every k: each prefix entry is >= 0, the tail
// infimum over k >= max(K,1) is >= 0, and for K = 0 the index-0 value b too.
inline bool seq_is_nonneg(const TailSeq& seq) {
  for (const Ratio& r : seq.prefix())
    if (r.sign() < 0) return false;
  if (seq.prefix_size() == 0 && seq.tail().offset.sign() < 0) return false;
  const BigInt start = seq.prefix_size() == 0 ? BigInt(1) : BigInt(seq.prefix_size());
  return inf_shifted(seq, Ratio(0), start) >= XReal(Ratio(0));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

// "[r0,r1,...]" -> rationals; "[]" -> empty.
inline std::vector<Ratio> parse_ratio_list(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("expected [..] list, got '" + std::string(text) + "'");
  std::string_view inner = trim(text.substr(1, text.size() - 2));
  std::vector<Ratio> out;
  if (inner.empty()) return out;
  for (std::string_view part : split(inner, ','))
    out.push_back(Ratio::parse(trim(part)));
  return out;
}

// "(a,b,s)" -> exactly three rationals.
inline std::vector<Ratio> parse_ratio_tuple(std::string_view text, std::size_t arity) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("expected (..) tuple, got '" + std::string(text) + "'");
  std::vector<Ratio> out;
  for (std::string_view part : split(text.substr(1, text.size() - 2), ','))
    out.push_back(Ratio::parse(trim(part)));
  if (out.size() != arity)
    throw ParseError("expected " + std::to_string(arity) + " components, got " +
                     std::to_string(out.size()));
  return out;
}

}  // namespace detail

inline TailSeq TailSeq::parse(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("sequence spec needs 'prefix=[..]; tail=(a,b,s)'");
  std::string_view lhs = detail::trim(text.substr(0, semi));
  std::string_view rhs = detail::trim(text.substr(semi + 1));
  if (lhs.substr(0, 7) != "prefix=")
    throw ParseError("sequence spec must start with 'prefix='");
  if (rhs.substr(0, 5) != "tail=")
    throw ParseError("sequence spec must contain 'tail='");
  std::vector<Ratio> prefix = detail::parse_ratio_list(lhs.substr(7));
  std::vector<Ratio> tuple = detail::parse_ratio_tuple(rhs.substr(5), 3);
  return TailSeq(std::move(prefix), TailRule{tuple[0], tuple[1], tuple[2]});
}

}  // namespace galegap
