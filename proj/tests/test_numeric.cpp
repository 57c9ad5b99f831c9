#include <catch_amalgamated.hpp>

#include "galegap/numeric.hpp"
#include "support/generators.hpp"

using namespace galegap;

TEST_CASE("isqrt examples") {
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(16)) == 4);
  CHECK(isqrt(BigInt(17)) == 4);  // 4^2 = 16 <= 17 < 25 = 5^2
  CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("isqrt bracket and monotonicity") {
  testgen::Rng rng(1);
  BigInt prev_n(0), prev_r(0);
  for (int i = 0; i < 500; ++i) {
    BigInt n(rng.int_in(0, 1'000'000));
    n *= n;  // exercise large values too
    n += rng.int_in(0, 1000);
    const BigInt r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    if (n >= prev_n) CHECK(r >= prev_r);
    if (n <= prev_n) CHECK(r <= prev_r);
    prev_n = n;
    prev_r = r;
  }
}

TEST_CASE("rational arithmetic is exact") {
  testgen::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const Ratio a = rng.ratio_in(-50, 50, 40);
    const Ratio b = rng.ratio_in(-50, 50, 40);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("canonical form") {
  CHECK(Ratio(2, 6) == Ratio(1, 3));
  CHECK(Ratio(-2, -6) == Ratio(1, 3));
  CHECK(Ratio(2, -6) == Ratio(-1, 3));
  CHECK(Ratio(0, 7) == Ratio(0));
  CHECK(Ratio(0, -7).denominator() == 1);
  const Ratio r(21, 14);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  // normalizing twice equals normalizing once
  CHECK(Ratio(r.numerator(), r.denominator()) == r);
  CHECK_THROWS_AS(Ratio(1, 0), std::domain_error);
  CHECK_THROWS_AS(Ratio(1) / Ratio(0), std::domain_error);
}

TEST_CASE("floor and ceil") {
  CHECK(Ratio(7, 2).floor() == 3);
  CHECK(Ratio(7, 2).ceil() == 4);
  CHECK(Ratio(-7, 2).floor() == -4);
  CHECK(Ratio(-7, 2).ceil() == -3);
  CHECK(Ratio(4).floor() == 4);
  CHECK(Ratio(4).ceil() == 4);
}

TEST_CASE("rational text round-trip") {
  CHECK(Ratio::parse("5").str() == "5");
  CHECK(Ratio::parse("-5").str() == "-5");
  CHECK(Ratio::parse("2/6").str() == "1/3");
  CHECK(Ratio::parse("-2/6") == Ratio(-1, 3));
  for (const char* bad : {"", "+5", "1/-2", "1 /2", "a/b", "1/", "/2", "1//2", "1/0"}) {
    INFO(bad);
    CHECK_THROWS_AS(Ratio::parse(bad), ParseError);
  }
  testgen::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Ratio r = rng.ratio_in(-1000, 1000, 999);
    CHECK(Ratio::parse(r.str()) == r);
  }
}

TEST_CASE("extended real ordering") {
  const XReal ni = XReal::neg_inf();
  const XReal pi = XReal::pos_inf();
  CHECK(ni < XReal(Ratio(0)));
  CHECK(XReal(Ratio(1, 3)) == XReal(Ratio(2, 6)));
  CHECK(pi == XReal::pos_inf());
  CHECK(ni < pi);
  CHECK(XReal(Ratio(1'000'000)) < pi);
  CHECK(ni < XReal(Ratio(-1'000'000)));
}

TEST_CASE("extended real arithmetic") {
  const XReal pi = XReal::pos_inf();
  const XReal ni = XReal::neg_inf();
  CHECK(pi + XReal(Ratio(5)) == pi);
  CHECK(ni + XReal(Ratio(5)) == ni);
  CHECK(pi + pi == pi);
  CHECK_THROWS_AS(pi + ni, std::domain_error);
  CHECK_THROWS_AS(pi - pi, std::domain_error);
  CHECK(Ratio(2) * pi == pi);
  CHECK(Ratio(-2) * pi == ni);
  CHECK_THROWS_AS(Ratio(0) * pi, std::domain_error);
  CHECK(Ratio(0) * XReal(Ratio(7)) == XReal(Ratio(0)));
}

TEST_CASE("extended real text round-trip") {
  CHECK(XReal::parse("-inf").is_neg_inf());
  CHECK(XReal::parse("inf").is_pos_inf());
  CHECK(XReal::parse("3/4") == XReal(Ratio(3, 4)));
  CHECK(XReal::pos_inf().str() == "inf");
  CHECK(XReal::neg_inf().str() == "-inf");
  CHECK(XReal(Ratio(-3, 4)).str() == "-3/4");
}
