#include "doctest.h"
#include "test_support.hpp"

using namespace ctk;
using tst::zpoly;

TEST_SUITE("padic") {

TEST_CASE("PadicInt canonicalization and arithmetic") {
  PadicInt a(3, 4, Int(100));  // 100 mod 81 = 19
  CHECK(a.residue == 19);
  CHECK(a.modulus() == 81);
  PadicInt neg(3, 4, Int(-1));
  CHECK(neg.residue == 80);
  PadicInt b(3, 4, Int(70));
  CHECK((a + b).residue == 8);   // 89 mod 81
  CHECK((a - b).residue == 30);  // -51 mod 81
  CHECK((a * b).residue == (Int(19) * 70) % 81);
  CHECK(a == PadicInt(3, 4, Int(19)));
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(a + PadicInt(3, 5, Int(1)), std::logic_error);
  CHECK_THROWS_AS(a * PadicInt(5, 4, Int(1)), std::logic_error);
}

TEST_CASE("valuation of truncated values") {
  CHECK(valuation(PadicInt(3, 5, Int(18))) == PadicValuation{false, 2});
  CHECK(valuation(PadicInt(3, 5, Int(0))) == PadicValuation{true, 5});
  CHECK(valuation(PadicInt(5, 4, Int(375))) == PadicValuation{false, 3});
  CHECK(valuation(PadicInt(2, 3, Int(7))) == PadicValuation{false, 0});
  CHECK(valuation(PadicInt(7, 2, Int(49))) == PadicValuation{true, 2});
}

TEST_CASE("int_pow") {
  CHECK(int_pow(3, 4) == 81);
  CHECK(int_pow(2, 0) == 1);
  CHECK(int_pow(359, 2) == 128881);
}

TEST_CASE("reduction Z -> Z/p^N is a ring homomorphism") {
  SplitMix64 rng(0xadd1u);
  for (int i = 0; i < 60; ++i) {
    long x = static_cast<long>(rng.below(20001)) - 10000;
    long y = static_cast<long>(rng.below(20001)) - 10000;
    PadicInt px(3, 5, Int(x)), py(3, 5, Int(y));
    CHECK(px + py == PadicInt(3, 5, Int(x + y)));
    CHECK(px - py == PadicInt(3, 5, Int(x - y)));
    CHECK(px * py == PadicInt(3, 5, Int(x) * Int(y)));
  }
}

TEST_CASE("exact root lifts with infinite slope") {
  auto cert = hensel_lift(zpoly({-5, 1}), 7, Int(5), 4);
  CHECK(cert.residue == 5);
  CHECK(cert.v_f == PVal::inf());
  CHECK(cert.v_fp == PVal::fin(0));
  CHECK(cert.N == 4);
  CHECK(replay_lift(zpoly({-5, 1}), cert));
}

TEST_CASE("square root of 2 in Z_7") {
  auto f = zpoly({-2, 0, 1});
  auto cert = hensel_lift(f, 7, Int(3), 3);  // 3^2 = 9 = 2 mod 7
  CHECK(cert.v_f == PVal::fin(1));
  CHECK(cert.v_fp == PVal::fin(0));
  // the certificate residue is the unique square root of 2 mod 343
  // congruent to 3 mod 7
  Int found(-1);
  for (long r = 0; r < 343; ++r)
    if ((Int(r) * r) % 343 == 2 && r % 7 == 3) {
      CHECK(found == -1);
      found = r;
    }
  CHECK(cert.residue == found);
  CHECK(replay_lift(f, cert));

  // raising the precision refines the same root
  auto cert6 = hensel_lift(f, 7, Int(3), 6);
  CHECK(cert6.residue % 343 == cert.residue);
  CHECK(replay_lift(f, cert6));
}

TEST_CASE("slope condition is enforced, not assumed") {
  // 5x^3 + 72 + 10 + 12(x+3)^3, expanded
  auto f = zpoly({406, 324, 108, 17});
  CHECK(f.eval(Int(1)) == 855);   // v_3 = 2
  CHECK(f.derivative().eval(Int(1)) == 591);  // v_3 = 1: 2 > 2 fails
  try {
    hensel_lift(f, 3, Int(1), 5);
    FAIL("expected SlopeConditionFailed");
  } catch (const SlopeConditionFailed& e) {
    CHECK(e.v_f == PVal::fin(2));
    CHECK(e.v_fp == PVal::fin(1));
  }
}

TEST_CASE("deeper residue satisfies the slope condition and lifts") {
  auto f = zpoly({406, 324, 108, 17});
  CHECK(f.eval(Int(7)) == 13797);  // v_3 = 3 > 2 v_3(f'(7)) = 2
  auto cert = hensel_lift(f, 3, Int(7), 5);
  CHECK(cert.v_f == PVal::fin(3));
  CHECK(cert.v_fp == PVal::fin(1));
  // basin congruence: the root stays 7 mod 3^{v(f')+1}, hence 1 mod 3
  CHECK(cert.residue % 9 == 7);
  CHECK(cert.residue % 3 == 1);
  auto vr = valuation(PadicInt(3, 5, f.eval(cert.residue)));
  CHECK(vr.at_least_precision);
  CHECK(replay_lift(f, cert));
}

TEST_CASE("replay rejects tampered certificates") {
  auto f = zpoly({-2, 0, 1});
  auto cert = hensel_lift(f, 7, Int(3), 3);
  auto bad = cert;
  bad.residue = cert.residue + 1;
  CHECK_FALSE(replay_lift(f, bad));
  bad = cert;
  bad.a0 = Int(4);  // wrong basin: 4^2 = 16 = 2 mod 7, a different root
  CHECK_FALSE(replay_lift(f, bad));
  bad = cert;
  bad.N = cert.N + 2;  // claims more precision than the residue carries
  CHECK_FALSE(replay_lift(f, bad));
}

TEST_CASE("no lift when there is no root at all") {
  // x^2 - 3 has no root mod 7 (3 is not a QR mod 7); every residue fails
  // the slope condition since v(f(a)) = 0 for all a not divisible by 7
  auto f = zpoly({-3, 0, 1});
  for (long a = 1; a < 7; ++a)
    CHECK_THROWS_AS(hensel_lift(f, 7, Int(a), 3), SlopeConditionFailed);
}

TEST_CASE("solvability of the t = 1 fiber at p = 3 goes through the window") {
  auto cert = local_solvability(build_fiber(Rational(1)), 3, 5);
  CHECK(cert.verdict == SolvabilityCertificate::Verdict::Solvable);
  CHECK(cert.strategy == "window-mod-p2");
  REQUIRE(cert.lift.has_value());
  CHECK(cert.lift->residue % 3 == 1);
  CHECK(replay_solvability(build_fiber(Rational(1)), cert));
}

}  // TEST_SUITE
