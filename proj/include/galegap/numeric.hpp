#pragma once

// Exact scalars: arbitrary-precision rationals and extended reals
// (rationals together with -inf/+inf). No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace galegap {

using BigInt = boost::multiprecision::cpp_int;

// Violated precondition or invalid construction. CLI maps this to exit 3.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input; carries a 1-based line number when one is known.
// CLI maps this to exit 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// floor(sqrt(n)). The result r satisfies r^2 <= n < (r+1)^2.
inline BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw std::domain_error("isqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

// Reduced fraction with positive denominator; zero is 0/1. All arithmetic is
// exact. Values are immutable as far as the public surface is concerned and
// safe to share across threads.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(long long n) : num_(n), den_(1) {}  // NOLINT: integers embed implicitly
  explicit Ratio(BigInt n) : num_(std::move(n)), den_(1) {}
  Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Ratio: zero denominator");
    normalize();
  }
  Ratio(long long num, long long den) : Ratio(BigInt(num), BigInt(den)) {}

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Ratio operator-(const Ratio& a) { return Ratio(raw{}, -a.num_, a.den_); }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.is_zero()) throw std::domain_error("Ratio: division by zero");
    return Ratio(a.num_ * b.den_, a.den_ * b.num_);
  }

  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
  Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
  Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
  Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest integer <= value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ % den_ != 0 && num_.sign() < 0) --q;
    return q;
  }
  // Smallest integer >= value.
  BigInt ceil() const { return -(-*this).floor(); }

  // "p" for integers, "p/q" otherwise; '-' prefixes negative values.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  // Accepts exactly the textual form produced by str().
  static Ratio parse(std::string_view text) {
    std::string_view t = text;
    bool negative = false;
    if (!t.empty() && t.front() == '-') {
      negative = true;
      t.remove_prefix(1);
    }
    const std::size_t slash = t.find('/');
    std::string_view num_digits = t.substr(0, slash);
    std::string_view den_digits =
        slash == std::string_view::npos ? std::string_view{} : t.substr(slash + 1);
    auto all_digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char c : d)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!all_digits(num_digits) ||
        (slash != std::string_view::npos && !all_digits(den_digits)))
      throw ParseError("not a rational: '" + std::string(text) + "'");
    BigInt num{std::string(num_digits)};
    BigInt den = slash == std::string_view::npos ? BigInt(1)
                                                 : BigInt{std::string(den_digits)};
    if (den.is_zero())
      throw ParseError("zero denominator: '" + std::string(text) + "'");
    if (negative) num = -num;
    return Ratio(std::move(num), std::move(den));
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
    return os << r.str();
  }

 private:
  struct raw {};  // tag: operands already canonical
  Ratio(raw, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;  // > 0
};

inline Ratio abs(const Ratio& r) { return r.sign() < 0 ? -r : r; }

// Extended real: -inf < every finite rational < +inf. Opposite infinities do
// not cancel; (+inf) + (-inf) and 0 * inf are rejected rather than given a
// silent absorbing value.
class XReal {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  XReal() : kind_(Kind::finite) {}
  XReal(Ratio v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT
  XReal(long long v) : XReal(Ratio(v)) {}                        // NOLINT

  static XReal pos_inf() { return XReal(Kind::pos_inf); }
  static XReal neg_inf() { return XReal(Kind::neg_inf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }

  const Ratio& finite_value() const {
    if (!is_finite()) throw std::domain_error("XReal: value is not finite");
    return value_;
  }

  friend XReal operator-(const XReal& x) {
    if (x.is_pos_inf()) return neg_inf();
    if (x.is_neg_inf()) return pos_inf();
    return XReal(-x.value_);
  }

  friend XReal operator+(const XReal& a, const XReal& b) {
    if (a.is_finite() && b.is_finite()) return XReal(a.value_ + b.value_);
    if (a.is_finite()) return b;
    if (b.is_finite()) return a;
    if (a.kind_ == b.kind_) return a;
    throw std::domain_error("XReal: (+inf) + (-inf) is undefined");
  }
  friend XReal operator-(const XReal& a, const XReal& b) { return a + (-b); }

  // Scaling by a rational; 0 * inf is rejected.
  friend XReal operator*(const Ratio& a, const XReal& x) {
    if (x.is_finite()) return XReal(a * x.value_);
    if (a.sign() == 0) throw std::domain_error("XReal: 0 * infinity is undefined");
    return (a.sign() > 0) == x.is_pos_inf() ? pos_inf() : neg_inf();
  }

  friend bool operator==(const XReal& a, const XReal& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const XReal& a, const XReal& b) {
    const int ra = rank(a.kind_);
    const int rb = rank(b.kind_);
    if (ra != rb) return ra < rb ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_finite()) return a.value_ <=> b.value_;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "inf";
      default: return value_.str();
    }
  }

  static XReal parse(std::string_view text) {
    if (text == "-inf") return neg_inf();
    if (text == "inf") return pos_inf();
    return XReal(Ratio::parse(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const XReal& x) {
    return os << x.str();
  }

 private:
  explicit XReal(Kind k) : kind_(k) {}
  static int rank(Kind k) noexcept {
    return k == Kind::neg_inf ? -1 : k == Kind::finite ? 0 : 1;
  }

  Kind kind_;
  Ratio value_;  // meaningful only when finite
};

}  // namespace galegap
