#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace ctk;
using tst::fpoly;
using tst::zpoly;

TEST_SUITE("galoisfield") {

TEST_CASE("PrimeField certifies primality") {
  CHECK(PrimeField(2).p == 2);
  CHECK(PrimeField(359).p == 359);
  CHECK_THROWS_AS(PrimeField(6), NotPrime);
  CHECK_THROWS_AS(PrimeField(1), NotPrime);
  CHECK_THROWS_AS(PrimeField(-3), NotPrime);
}

TEST_CASE("Fp arithmetic") {
  Fp a(5, 7), b(4, 7);
  CHECK(a + b == Fp(2, 7));
  CHECK(a - b == Fp(1, 7));
  CHECK(a * b == Fp(6, 7));
  CHECK(Fp(-1, 7) == Fp(6, 7));
  CHECK(fp_inv(Fp(3, 7)) == Fp(5, 7));  // 3*5 = 15 = 1
  CHECK_THROWS_AS(fp_inv(Fp(0, 7)), DivisionByZero);
  CHECK(fp_pow(Fp(3, 7), Int(6)) == Fp(1, 7));  // Fermat
  CHECK(fp_pow(Fp(3, 7), Int(-1)) == Fp(5, 7));
  CHECK(fp_from(Int(-20), 7) == Fp(1, 7));
  CHECK(fp_from(Rational(1, 2), 7) == Fp(4, 7));  // 2*4 = 1 mod 7
  CHECK_THROWS_AS(fp_from(Rational(1, 7), 7), DivisionByZero);
}

TEST_CASE("canonical extension moduli") {
  auto f2 = build_extension(2, 1);
  CHECK(f2.modulus == std::vector<long>{0, 1});  // x itself
  CHECK(f2.size() == 2);
  auto f8 = build_extension(2, 3);
  CHECK(f8.modulus == std::vector<long>{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(f8.size() == 8);
  auto f49 = build_extension(7, 2);
  CHECK(f49.modulus == std::vector<long>{1, 0, 1});  // x^2 + 1
  CHECK(f49.size() == 49);
  // modulus is irreducible by construction
  UniPoly<Fp> m(Fp(0, 7));
  for (long c : f49.modulus) m.c.push_back(Fp(c, 7));
  CHECK(is_irreducible_mod_p(m));
}

TEST_CASE("F_8 generator relations") {
  auto F = build_extension(2, 3);
  auto g = fq_gen(F);
  CHECK(g * g * g == g + fq_one(F));      // x^3 = x + 1
  CHECK(fq_pow(g, Int(7)) == fq_one(F));  // multiplicative order divides 7
  CHECK(fq_pow(g, Int(1)) == g);
  CHECK(fq_inv(g) * g == fq_one(F));
  CHECK_THROWS_AS(fq_inv(fq_zero(F)), DivisionByZero);
}

TEST_CASE("inverse roundtrip across the whole field") {
  auto F = build_extension(3, 2);
  for (const auto& a : enumerate_field_elements(fq_zero(F))) {
    if (is_zero(a)) continue;
    CHECK(fq_inv(a) * a == fq_one(F));
    CHECK(field_inv(field_inv(a)) == a);
  }
}

TEST_CASE("frobenius is a field automorphism fixing exactly F_p") {
  for (auto [p, k] : {std::pair<long, int>{2, 3}, {3, 4}, {5, 2}}) {
    auto F = build_extension(p, k);
    auto elems = enumerate_field_elements(fq_zero(F));
    CHECK(Int(static_cast<long>(elems.size())) == F.size());
    SplitMix64 rng(0xf0b0u ^ static_cast<unsigned long>(p));
    for (int i = 0; i < 40; ++i) {
      auto a = ff_random(fq_zero(F), rng);
      auto b = ff_random(fq_zero(F), rng);
      CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
      CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
    }
    int fixed = 0;
    for (const auto& a : elems)
      if (frobenius(a) == a) ++fixed;
    CHECK(fixed == p);  // the prime subfield and nothing else
  }
}

TEST_CASE("embed / as_prime_field roundtrip") {
  auto F = build_extension(5, 3);
  for (long v = 0; v < 5; ++v) {
    auto e = embed(Fp(v, 5), F);
    CHECK(as_prime_field(e) == Fp(v, 5));
  }
  CHECK(embed(Fp(3, 5), F) == fq_from(F, 3));
  CHECK_THROWS(as_prime_field(fq_gen(F)));
}

TEST_CASE("ff_key orders elements canonically") {
  auto F = build_extension(2, 3);
  CHECK(ff_key(fq_zero(F)) == 0);
  CHECK(ff_key(fq_one(F)) == 1);
  CHECK(ff_key(fq_gen(F)) == 2);
  CHECK(ff_key(fq_gen(F) + fq_one(F)) == 3);
}

TEST_CASE("field_roots with multiplicities") {
  SplitMix64 rng(0x00157u);
  // x^2 + 1 = (x+1)^2 over F_2
  auto r = field_roots(fpoly(2, {1, 0, 1}), rng);
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == Fp(1, 2));
  CHECK(r[0].second == 2);
  // no roots of x^2 + 1 in F_3 itself
  CHECK(roots_in_prime_field(fpoly(3, {1, 0, 1}), rng).empty());
  // but two simple roots in F_9, each a square root of -1
  auto F9 = build_extension(3, 2);
  auto rr = roots_in_field(fpoly(3, {1, 0, 1}), F9, rng);
  REQUIRE(rr.size() == 2);
  auto minus_one = fq_zero(F9) - fq_one(F9);
  for (auto& [root, mult] : rr) {
    CHECK(mult == 1);
    CHECK(root * root == minus_one);
  }
  CHECK(ff_key(rr[0].first) < ff_key(rr[1].first));
}

TEST_CASE("roots_in_prime_field of x^3 - x over F_3") {
  SplitMix64 rng(0x31337u);
  auto r = roots_in_prime_field(fpoly(3, {0, 2, 0, 1}), rng);
  REQUIRE(r.size() == 3);
  CHECK(r[0].first == Fp(0, 3));
  CHECK(r[1].first == Fp(1, 3));
  CHECK(r[2].first == Fp(2, 3));
  for (auto& [root, mult] : r) CHECK(mult == 1);
}

TEST_CASE("the eliminant splits completely in F_{7^12}") {
  SplitMix64 rng(0xabcdu);
  auto F = build_extension(7, 12);
  auto roots = roots_in_field(reduce_mod_p(tst::sing12(), 7), F, rng);
  REQUIRE(roots.size() == 12);
  std::set<Int> keys;
  for (auto& [root, mult] : roots) {
    CHECK(mult == 1);
    keys.insert(ff_key(root));
    // none of the roots lies in the prime field
    CHECK_THROWS(as_prime_field(root));
  }
  CHECK(keys.size() == 12);
}

TEST_CASE("is_irreducible_mod_p") {
  CHECK(is_irreducible_mod_p(fpoly(2, {1, 1, 0, 1})));      // x^3+x+1
  CHECK(is_irreducible_mod_p(fpoly(7, {1, 0, 1})));         // x^2+1 mod 7
  CHECK_FALSE(is_irreducible_mod_p(fpoly(5, {1, 0, 1})));   // (x+2)(x+3)
  CHECK_FALSE(is_irreducible_mod_p(fpoly(3, {0, 1, 1})));   // x(x+1)
  CHECK(is_irreducible_mod_p(fpoly(3, {1, 1})));            // linear
}

TEST_CASE("reduce_mod_p") {
  CHECK(reduce_mod_p(zpoly({-1, 7, 10}), 7) == fpoly(7, {6, 0, 3}));
  // degree can drop when the leading coefficient vanishes
  CHECK(reduce_mod_p(zpoly({1, 14}), 7) == fpoly(7, {1}));
  CHECK_THROWS_AS(reduce_mod_p(zpoly({7, 21}), 7), ZeroPolynomial);
}

TEST_CASE("multiplicative order divides p^k - 1") {
  auto F = build_extension(5, 3);
  SplitMix64 rng(0x7e57u);
  for (int i = 0; i < 30; ++i) {
    auto a = ff_random(fq_zero(F), rng);
    if (is_zero(a)) continue;
    CHECK(fq_pow(a, Int(124)) == fq_one(F));
  }
}

TEST_CASE("roots_in_field agrees with exhaustive evaluation") {
  SplitMix64 rng(0x600du);
  for (auto [p, k] : {std::pair<long, int>{3, 2}, {5, 4}}) {
    auto F = build_extension(p, k);
    auto elems = enumerate_field_elements(fq_zero(F));
    for (int trial = 0; trial < 10; ++trial) {
      UniPoly<Fp> f(Fp(0, p));
      int d = 2 + static_cast<int>(rng.below(4));
      for (int j = 0; j <= d; ++j)
        f.c.push_back(Fp(static_cast<long>(rng.below(static_cast<unsigned long>(p))), p));
      f.normalize();
      if (f.degree() < 1) continue;
      auto found = roots_in_field(f, F, rng);
      // lift f into F_{p^k}[x] and evaluate everywhere
      UniPoly<FqElem> fext(fq_zero(F));
      for (auto& coeff : f.c) fext.c.push_back(embed(coeff, F));
      fext.normalize();
      std::set<Int> expect;
      for (const auto& a : elems)
        if (is_zero(fext.eval(a))) expect.insert(ff_key(a));
      std::set<Int> got;
      unsigned total_mult = 0;
      for (auto& [root, mult] : found) {
        got.insert(ff_key(root));
        total_mult += mult;
        CHECK(is_zero(fext.eval(root)));
      }
      CHECK(got == expect);
      CHECK(total_mult <= static_cast<unsigned>(f.degree()));
    }
  }
}

}  // TEST_SUITE
