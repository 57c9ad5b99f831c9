#include <catch_amalgamated.hpp>

#include "galegap/vsw.hpp"
#include "support/generators.hpp"

using namespace galegap;

TEST_CASE("set membership examples") {
  CHECK(in_C0(EtaPoint{Ratio(1), Ratio(0), Ratio(0)}));
  CHECK_FALSE(in_C0(EtaPoint{Ratio(1, 2), Ratio(0), Ratio(0)}));
  CHECK(in_C0(EtaPoint{Ratio(0), Ratio(1), Ratio(0)}));

  CHECK(in_C1(EtaPoint{Ratio(0), Ratio(0), Ratio(-1)}));
  CHECK_FALSE(in_C1(EtaPoint{Ratio(0), Ratio(0), Ratio(0)}));
  CHECK_FALSE(in_C1(EtaPoint{Ratio(-1), Ratio(0), Ratio(-1, 2)}));

  CHECK(in_cl_Cprime(EtaPoint{Ratio(0), Ratio(0), Ratio(0)}));
  CHECK(in_cl_Cprime(EtaPoint{Ratio(0), Ratio(0), Ratio(-1)}));
  CHECK_FALSE(in_cl_Cprime(EtaPoint{Ratio(0), Ratio(2), Ratio(0)}));
}

TEST_CASE("union stays inside the closure") {
  testgen::Rng rng(51);
  for (int i = 0; i < 400; ++i) {
    const EtaPoint p{rng.ratio_in(-3, 3, 8), rng.ratio_in(-3, 3, 8),
                     rng.ratio_in(-3, 3, 8)};
    if (in_Cprime(p)) CHECK(in_cl_Cprime(p));
  }
}

TEST_CASE("two-support witness examples") {
  const SparseSeq a = c1_witness(EtaPoint{Ratio(0), Ratio(0), Ratio(-1)});
  CHECK(a == SparseSeq{{1, Ratio(1)}});

  const SparseSeq b = c1_witness(EtaPoint{Ratio(0), Ratio(-1), Ratio(-1)});
  CHECK(b == SparseSeq{{2, Ratio(1)}});

  const SparseSeq c = c1_witness(EtaPoint{Ratio(5), Ratio(1, 2), Ratio(-1, 4)});
  CHECK(c == SparseSeq{{2, Ratio(1, 4)}});

  CHECK_THROWS_AS(c1_witness(EtaPoint{Ratio(0), Ratio(0), Ratio(0)}), ContractError);
  CHECK_THROWS_AS(c1_witness(EtaPoint{Ratio(-1), Ratio(0), Ratio(-1)}), ContractError);
}

TEST_CASE("witness solves the defining equations exactly") {
  testgen::Rng rng(52);
  for (int i = 0; i < 400; ++i) {
    // y2 in (-q, 0), y1 <= 1 + y2, eta >= 0
    const Ratio y2 = -rng.positive_ratio(4, 8);
    const Ratio y1 = Ratio(1) + y2 - rng.nonneg_ratio(4, 8);
    const EtaPoint p{rng.nonneg_ratio(3), y1, y2};
    REQUIRE(in_C1(p));
    const SparseSeq x = c1_witness(p);
    Ratio sum(0), weighted(0);
    for (const auto& [idx, val] : x) {
      CHECK(idx >= 1);
      CHECK(val.sign() > 0);
      sum += val;
      weighted += Ratio(idx) * val;
    }
    CHECK(sum == -p.y2);
    CHECK(weighted == Ratio(1) - p.y1);
  }
}

TEST_CASE("line intersection characterizations") {
  for (const Ratio& eta : {Ratio(0), Ratio(1, 2), Ratio(1), Ratio(2)}) {
    const EtaPoint p{eta, Ratio(0), Ratio(0)};
    CHECK(in_line_cap_Cprime(p) == (eta >= Ratio(1)));
    CHECK(in_line_cap_cl_Cprime(p));
  }
  CHECK_FALSE(in_line_cap_Cprime(EtaPoint{Ratio(1), Ratio(1), Ratio(0)}));
  CHECK_FALSE(in_line_cap_cl_Cprime(EtaPoint{Ratio(1), Ratio(1), Ratio(0)}));

  CHECK(verify_line_intersections(Ratio(-2), Ratio(2), Ratio(1, 4)));
  CHECK_THROWS_AS(verify_line_intersections(Ratio(0), Ratio(1), Ratio(0)), ContractError);

  const LineIntersectionReport rep = line_intersections();
  CHECK(rep.cap_cprime.find("eta >= 1") != std::string::npos);
  CHECK(rep.cap_cl_cprime.find("eta >= 0") != std::string::npos);
}

TEST_CASE("logarithm intervals are certified") {
  const RatInterval ln2 = ln_interval(2);
  CHECK(ln2.lo <= ln2.hi);
  CHECK(ln2.width() < Ratio(1, 1'000'000'000));
  CHECK(ln2.lo > Ratio(693147, 1'000'000));
  CHECK(ln2.hi < Ratio(693148, 1'000'000));

  const RatInterval ln10 = ln_interval(10);
  CHECK(ln10.lo > Ratio(2302585, 1'000'000));
  CHECK(ln10.hi < Ratio(2302586, 1'000'000));
  // ln is increasing
  Ratio prev(0);
  for (int n = 1; n <= 40; ++n) {
    const RatInterval iv = ln_interval(n);
    CHECK(iv.lo <= iv.hi);
    if (n > 1) CHECK(iv.hi > prev);
    prev = iv.lo;
  }
  CHECK_THROWS_AS(ln_interval(0), ContractError);
}

TEST_CASE("geometric fixture matches the closed form") {
  // sum_{n<=N} n 2^-n = 2 - (N+2)/2^N
  for (std::int64_t n : {1, 5, 10, 30}) {
    const auto sums = dspace_fixture_partial_sums(DspaceFixture::geometric, n);
    const Ratio expect = Ratio(2) - Ratio(BigInt(n + 2), BigInt(1) << n);
    CHECK(sums.weighted.lo == expect);
    CHECK(sums.weighted.hi == expect);
  }
}

TEST_CASE("harmonic fixture grows past any fixed bound") {
  const auto s100 = dspace_fixture_partial_sums(DspaceFixture::harmonic, 100);
  CHECK(s100.absolute.lo > Ratio(4));
  const auto s30 = dspace_fixture_partial_sums(DspaceFixture::harmonic, 30);
  CHECK(s100.absolute.lo > s30.absolute.lo);
  CHECK(s100.label == "not-absolutely-summable");
}

TEST_CASE("alternating inverse-square partial sums bracket their limit") {
  Ratio prev_even(0), prev_odd(0);
  bool first = true;
  for (std::int64_t n = 6; n <= 40; n += 2) {
    const Ratio even =
        dspace_fixture_partial_sums(DspaceFixture::alt_inv_square, n).weighted.lo;
    const Ratio odd =
        dspace_fixture_partial_sums(DspaceFixture::alt_inv_square, n + 1).weighted.lo;
    CHECK(odd < even);  // next term is negative
    if (!first) {
      CHECK(even < prev_even);  // even partial sums decrease
      CHECK(odd > prev_odd);    // odd partial sums increase
    }
    prev_even = even;
    prev_odd = odd;
    first = false;
  }
}

TEST_CASE("alternating harmonic weighted terms do not vanish") {
  // |n z_n| = n/(n+1) -> 1, so consecutive weighted partial sums stay apart
  for (std::int64_t n : {10, 50, 100}) {
    const Ratio here =
        dspace_fixture_partial_sums(DspaceFixture::alt_harmonic, n).weighted.lo;
    const Ratio next =
        dspace_fixture_partial_sums(DspaceFixture::alt_harmonic, n + 1).weighted.lo;
    CHECK(abs(next - here) >= Ratio(1, 2));
  }
}

TEST_CASE("logarithmic fixture: weighted sum brackets, absolute sum grows") {
  const auto s = dspace_fixture_partial_sums(DspaceFixture::log_alternating, 60);
  CHECK(s.weighted.lo <= s.weighted.hi);
  // partial sums of sum (-1)^n / ln n: bounded by the first term in size
  CHECK(s.weighted.hi < Ratio(2));
  CHECK(s.weighted.lo > Ratio(-2));
  const auto s20 = dspace_fixture_partial_sums(DspaceFixture::log_alternating, 20);
  CHECK(s.absolute.lo > s20.absolute.lo);  // divergent-trend flag
  CHECK_THROWS_AS(dspace_fixture_partial_sums(DspaceFixture::log_alternating, 0),
                  ContractError);
}

TEST_CASE("fixture names") {
  CHECK(dspace_fixture_from_name("geometric") == DspaceFixture::geometric);
  CHECK(dspace_fixture_from_name("alt-inv-square") == DspaceFixture::alt_inv_square);
  CHECK(dspace_fixture_from_name("harmonic") == DspaceFixture::harmonic);
  CHECK(dspace_fixture_from_name("alt-harmonic") == DspaceFixture::alt_harmonic);
  CHECK(dspace_fixture_from_name("log-alternating") == DspaceFixture::log_alternating);
  CHECK_THROWS_AS(dspace_fixture_from_name("zeta"), ContractError);
}
