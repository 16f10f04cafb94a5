#include "doctest.h"
#include "test_support.hpp"

using namespace ctk;
using tst::fpoly;
using tst::qpoly;
using tst::zpoly;

TEST_SUITE("polyring") {

TEST_CASE("UniPoly basics") {
  auto f = zpoly({2, 0, 3});  // 3x^2 + 2
  CHECK(f.degree() == 2);
  CHECK(f.at(0) == 2);
  CHECK(f.at(1) == 0);
  CHECK(f.at(5) == 0);
  CHECK(f.lc() == 3);
  CHECK(f.eval(Int(2)) == 14);
  CHECK(f.to_string() == "3*x^2 + 2");
  CHECK(zpoly({}).is_zero_poly());
  CHECK(zpoly({0, 0}).is_zero_poly());
  CHECK_THROWS_AS(zpoly({}).lc(), ZeroPolynomial);
  CHECK(UniPoly<Int>::monomial(Int(0), 4, Int(7)) == zpoly({0, 0, 0, 0, 7}));
  CHECK(UniPoly<Int>::constant(Int(5)) == zpoly({5}));
}

TEST_CASE("UniPoly arithmetic identities") {
  auto a = zpoly({1, 2, 3});
  auto b = zpoly({-4, 5});
  CHECK((a + b) - b == a);
  CHECK((a - b) + b == a);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK(-a + a == zpoly({}));
  CHECK(Int(3) * a == zpoly({3, 6, 9}));
  auto d = zpoly({5, 0, 1, 2}).derivative();  // 2x^3 + x^2 + 5
  CHECK(d == zpoly({0, 2, 6}));
}

TEST_CASE("polynomial exact division") {
  auto q = exact_div(zpoly({-1, 0, 1}), zpoly({-1, 1}));  // (x^2-1)/(x-1)
  CHECK(q == zpoly({1, 1}));
  CHECK_THROWS_AS(exact_div(zpoly({1, 0, 1}), zpoly({-1, 1})), std::logic_error);
  CHECK_THROWS_AS(exact_div(zpoly({1}), zpoly({})), DivisionByZero);
}

TEST_CASE("divmod and gcd over a field") {
  auto f = qpoly({-2, 0, 1});  // x^2 - 2
  auto g = qpoly({-3, 1});     // x - 3
  auto [q, r] = divmod_field(f, g);
  CHECK(q == qpoly({3, 1}));
  CHECK(r == qpoly({7}));
  CHECK(q * g + r == f);
  // gcd((x-1)(x-2), (x-1)(x-3)) = x - 1, monic
  auto a = qpoly({2, -3, 1}), b = qpoly({3, -4, 1});
  CHECK(poly_gcd(a, b) == qpoly({-1, 1}));
}

TEST_CASE("pow_mod over F_5") {
  auto m = fpoly(5, {1, 0, 1});  // x^2 + 1
  auto x = fpoly(5, {0, 1});
  // x^2 = -1 mod (x^2+1), so x^4 = 1
  CHECK(pow_mod(x, Int(4), m) == fpoly(5, {1}));
  CHECK(pow_mod(x, Int(2), m) == fpoly(5, {4}));
}

TEST_CASE("bareiss determinant") {
  std::vector<std::vector<Int>> m{{Int(2), Int(0), Int(1)},
                                  {Int(1), Int(3), Int(2)},
                                  {Int(1), Int(1), Int(4)}};
  CHECK(bareiss_det(m) == 18);  // expanded by hand
  std::vector<std::vector<Int>> s{{Int(1), Int(2)}, {Int(2), Int(4)}};
  CHECK(bareiss_det(s) == 0);
}

TEST_CASE("resultant worked examples") {
  CHECK(resultant(zpoly({-2, 0, 1}), zpoly({-3, 1})) == 7);
  // Res(x - a, x - b) = a - b with a = 5, b = 2
  CHECK(resultant(zpoly({-5, 1}), zpoly({-2, 1})) == 3);
  // degree-zero conventions
  CHECK(resultant(zpoly({2}), zpoly({1, 0, 1})) == 4);
  CHECK(resultant(zpoly({1, 0, 1}), zpoly({3})) == 9);
  CHECK(resultant(zpoly({5}), zpoly({7})) == 1);
  CHECK_THROWS_AS(resultant(zpoly({}), zpoly({1})), ZeroPolynomial);
}

TEST_CASE("resultant swap symmetry on random inputs") {
  SplitMix64 rng(0x4e5u);
  for (int i = 0; i < 60; ++i) {
    UniPoly<Int> f((Int(0))), g((Int(0)));
    int df = 1 + static_cast<int>(rng.below(4));
    int dg = 1 + static_cast<int>(rng.below(4));
    for (int j = 0; j <= df; ++j)
      f.c.emplace_back(static_cast<long>(rng.below(19)) - 9);
    for (int j = 0; j <= dg; ++j)
      g.c.emplace_back(static_cast<long>(rng.below(19)) - 9);
    f.normalize();
    g.normalize();
    if (f.is_zero_poly() || g.is_zero_poly()) continue;
    Int lhs = resultant(f, g);
    Int rhs = resultant(g, f);
    if ((f.degree() * g.degree()) % 2 != 0) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("discriminant worked examples") {
  CHECK(discriminant(zpoly({1, 0, 1})) == -4);
  // 5x^3 + 9y^3 - 10(x+y)^3 at y = 1:  -5x^3 - 30x^2 - 30x - 1
  CHECK(discriminant(zpoly({-1, -30, -30, -5})) == 242325);
  CHECK_THROWS_AS(discriminant(zpoly({1, 1})), DegreeTooSmall);
  // quadratic formula on random (a, b, c)
  SplitMix64 rng(0xd15cu);
  for (int i = 0; i < 50; ++i) {
    long a = static_cast<long>(rng.below(9)) + 1;
    long b = static_cast<long>(rng.below(19)) - 9;
    long c = static_cast<long>(rng.below(19)) - 9;
    CHECK(discriminant(zpoly({c, b, a})) == Int(b) * b - 4 * Int(a) * c);
  }
}

TEST_CASE("discriminant of the degree-12 eliminant") {
  FactoredInteger expect{1, {{2, 146}, {3, 92}, {5, 50}, {359, 4}}};
  Int d = discriminant(tst::sing12());
  CHECK(d == expect.reconstruct());
  CHECK(factor_over_basis(d, {2, 3, 5, 359}) == expect);
}

TEST_CASE("disc(f) = 0 iff gcd(f, f') nonconstant, over Q") {
  SplitMix64 rng(0x9d0u);
  for (int i = 0; i < 80; ++i) {
    UniPoly<Rational> f((Rational(0)));
    int d = 2 + static_cast<int>(rng.below(4));
    for (int j = 0; j <= d; ++j)
      f.c.emplace_back(static_cast<long>(rng.below(11)) - 5);
    f.normalize();
    if (f.degree() < 2) continue;
    if (i % 3 == 0) f = f * f;  // force a repeated factor
    if (f.degree() < 2) continue;
    bool disc_zero = is_zero(discriminant(f));
    bool gcd_nonconst = poly_gcd(f, f.derivative()).degree() > 0;
    CHECK(disc_zero == gcd_nonconst);
  }
}

TEST_CASE("content and primitive normalization") {
  CHECK(content(zpoly({6, -9, 12})) == 3);
  CHECK(primitive_part(zpoly({6, -9, 12})) == zpoly({2, -3, 4}));
  // negative leading coefficient flips
  CHECK(primitive_part(zpoly({4, -6})) == zpoly({-2, 3}));
  // (1/2)x + 1/3 -> 3x + 2
  UniPoly<Rational> f((Rational(0)));
  f.c = {Rational(1, 3), Rational(1, 2)};
  CHECK(primitive_integer(f) == zpoly({2, 3}));
  CHECK(gcd_primitive(zpoly({-2, 0, 2}), zpoly({2, 2})) == zpoly({1, 1}));
}

TEST_CASE("squarefree part over Q") {
  // x^2 (x+1) -> x (x+1)
  CHECK(squarefree_part(qpoly({0, 0, 1, 1})) == qpoly({0, 1, 1}));
  CHECK(squarefree_part(qpoly({0, 2, 1})) == qpoly({0, 2, 1}));
}

TEST_CASE("gcd_and_squarefree_part at good and bad primes") {
  auto s12 = tst::sing12();
  // mod 7: squarefree (7 does not divide the discriminant)
  auto f7 = reduce_mod_p(s12, 7);
  auto [g7, sq7] = gcd_and_squarefree_part(f7);
  CHECK(g7.degree() == 0);
  CHECK(sq7.degree() == 12);
  // mod 3 the eliminant collapses to u^12: derivative vanishes identically
  auto f3 = reduce_mod_p(s12, 3);
  CHECK(f3 == fpoly(3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  auto [g3, sq3] = gcd_and_squarefree_part(f3);
  CHECK(g3.degree() == 12);
  CHECK(sq3 == ring_one(f3));
}

TEST_CASE("factor_ff worked examples") {
  SplitMix64 rng(0x5eedu);
  auto f = factor_ff(fpoly(5, {1, 0, 1}), rng);  // x^2 + 1 = (x+2)(x+3) mod 5
  CHECK(f.lead == Fp(1, 5));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == fpoly(5, {2, 1}));
  CHECK(f.factors[0].second == 1);
  CHECK(f.factors[1].first == fpoly(5, {3, 1}));
  CHECK(f.reconstruct() == fpoly(5, {1, 0, 1}));

  auto g = factor_ff(fpoly(3, {0, 2, 0, 1}), rng);  // x^3 - x = x(x+1)(x+2)
  REQUIRE(g.factors.size() == 3);
  CHECK(g.factors[0].first == fpoly(3, {0, 1}));
  CHECK(g.factors[1].first == fpoly(3, {1, 1}));
  CHECK(g.factors[2].first == fpoly(3, {2, 1}));

  // non-monic lead is preserved
  auto h = factor_ff(fpoly(5, {2, 0, 2}), rng);
  CHECK(h.lead == Fp(2, 5));
  CHECK(h.reconstruct() == fpoly(5, {2, 0, 2}));
}

TEST_CASE("factor_ff multiplicities and inseparable input") {
  SplitMix64 rng(0x5eedu);
  // x^3 (x+1)^2 over F_5
  auto f = fpoly(5, {0, 1}) * fpoly(5, {0, 1}) * fpoly(5, {0, 1}) *
           fpoly(5, {1, 1}) * fpoly(5, {1, 1});
  auto ff = factor_ff(f, rng);
  REQUIRE(ff.factors.size() == 2);
  CHECK(ff.factors[0].first == fpoly(5, {0, 1}));
  CHECK(ff.factors[0].second == 3);
  CHECK(ff.factors[1].first == fpoly(5, {1, 1}));
  CHECK(ff.factors[1].second == 2);
  // (x^2+1)^3 = x^6 + 1 over F_3: derivative vanishes
  auto g = factor_ff(fpoly(3, {1, 0, 0, 0, 0, 0, 1}), rng);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].first == fpoly(3, {1, 0, 1}));
  CHECK(g.factors[0].second == 3);
}

TEST_CASE("factor_ff on the eliminant mod 7: two sextics") {
  SplitMix64 rng(0x5eedu);
  auto ff = factor_ff(reduce_mod_p(tst::sing12(), 7), rng);
  REQUIRE(ff.factors.size() == 2);
  CHECK(ff.factors[0].first.degree() == 6);
  CHECK(ff.factors[1].first.degree() == 6);
  CHECK(ff.factors[0].second == 1);
  CHECK(ff.factors[1].second == 1);
  CHECK(ff.reconstruct() == reduce_mod_p(tst::sing12(), 7));
  CHECK(is_irreducible_mod_p(ff.factors[0].first));
  CHECK(is_irreducible_mod_p(ff.factors[1].first));
}

TEST_CASE("factor_ff reconstructs random inputs and emits irreducibles") {
  SplitMix64 rng(0xfeedu);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 40; ++i) {
      UniPoly<Fp> f(Fp(0, p));
      int d = 1 + static_cast<int>(rng.below(7));
      for (int j = 0; j <= d; ++j)
        f.c.push_back(Fp(static_cast<long>(rng.below(static_cast<unsigned long>(p))), p));
      f.normalize();
      if (f.degree() < 1) continue;
      if (i % 4 == 0) f = f * f;  // exercise multiplicity handling
      auto ff = factor_ff(f, rng);
      CHECK(ff.reconstruct() == f);
      for (const auto& [irr, mult] : ff.factors) {
        CHECK(mult >= 1);
        CHECK(irr.lc() == Fp(1, p));
        CHECK(is_irreducible_mod_p(irr));
      }
    }
  }
}

TEST_CASE("is_irreducible_over_Q worked examples") {
  std::vector<std::pair<long, std::vector<int>>> patterns;
  auto w = is_irreducible_over_Q(zpoly({-2, 0, 1}), 10, &patterns);
  REQUIRE(w.has_value());
  CHECK(w->p == 3);  // x^2 - 2 is x^2 mod 2, irreducible mod 3
  CHECK(w->degrees == std::vector<int>{2});
  REQUIRE(!patterns.empty());
  CHECK(patterns[0].first == 2);
  CHECK(patterns[0].second == std::vector<int>{1, 1});

  CHECK_FALSE(is_irreducible_over_Q(zpoly({-1, 0, 1}), 200).has_value());
}

TEST_CASE("the eliminant has no irreducibility witness up to 200") {
  // every reduction splits with factor degrees dividing 6 (the u^3
  // substructure with square quartic discriminant forces this)
  std::vector<std::pair<long, std::vector<int>>> patterns;
  CHECK_FALSE(is_irreducible_over_Q(tst::sing12(), 200, &patterns).has_value());
  CHECK(!patterns.empty());
  for (const auto& [p, degs] : patterns) {
    CHECK(degs != std::vector<int>{12});
    for (int d : degs) CHECK((d == 1 || d == 2 || d == 3 || d == 6));
  }
}

TEST_CASE("MultiPoly arithmetic and views") {
  MultiPoly<Int> x = MultiPoly<Int>::monomial(3, {1, 0, 0}, Int(1));
  MultiPoly<Int> y = MultiPoly<Int>::monomial(3, {0, 1, 0}, Int(1));
  MultiPoly<Int> u = MultiPoly<Int>::monomial(3, {0, 0, 1}, Int(1));
  auto two = MultiPoly<Int>::constant(3, Int(2));
  auto f = x * x + two * y * u;  // x^2 + 2yu
  CHECK(f.degree(0) == 2);
  CHECK(f.total_degree() == 2);
  CHECK(f.derivative(0) == two * x);
  CHECK(f.eval_var(1, Int(3)) == x * x + MultiPoly<Int>::constant(3, Int(6)) * u);
  auto cs = f.coeffs_in(0);
  REQUIRE(cs.size() == 3);
  CHECK(cs[2] == MultiPoly<Int>::constant(3, Int(1)));
  // to_univar rejects leftover variables
  CHECK_THROWS_AS(f.to_univar(0, Int(0)), std::logic_error);
  CHECK((u * u).to_univar(2, Int(0)) == zpoly({0, 0, 1}));
  CHECK(exact_div(x * x - y * y, x - y) == x + y);
}

TEST_CASE("mp_resultant agrees with the univariate resultant") {
  // Res_x(x^2 - 2, x - 3) = 7, embedded in three variables
  MultiPoly<Int> x = MultiPoly<Int>::monomial(3, {1, 0, 0}, Int(1));
  auto f = x * x - MultiPoly<Int>::constant(3, Int(2));
  auto g = x - MultiPoly<Int>::constant(3, Int(3));
  auto r = mp_resultant(f, g, 0);
  CHECK(r == MultiPoly<Int>::constant(3, Int(7)));
}

TEST_CASE("partial resultant of the family at u = 0 is nonzero") {
  auto h = tst::family_dehom();
  auto h0 = h.eval_var(2, Int(0));
  auto r = mp_resultant(h0, h0.derivative(0), 0);
  CHECK_FALSE(r.is_zero_poly());  // the u = 0 fiber is smooth
}

TEST_CASE("eliminate_singular_locus reproduces the eliminant") {
  auto elim = eliminate_singular_locus(tst::family_dehom());
  CHECK(elim == tst::sing12());
}

TEST_CASE("eliminate_singular_locus toy families") {
  // x^2 + y^2 + u: singular only at u = 0
  MultiPoly<Int> h(3);
  h.add_term({2, 0, 0}, Int(1));
  h.add_term({0, 2, 0}, Int(1));
  h.add_term({0, 0, 1}, Int(1));
  CHECK(eliminate_singular_locus(h) == zpoly({0, 1}));

  // x^3 + y^3 + 1: no singular fiber at all -> constant 1
  MultiPoly<Int> g(3);
  g.add_term({3, 0, 0}, Int(1));
  g.add_term({0, 3, 0}, Int(1));
  g.add_term({0, 0, 0}, Int(1));
  CHECK(eliminate_singular_locus(g) == zpoly({1}));

  // a family not involving x at all is degenerate for this elimination
  MultiPoly<Int> b(3);
  b.add_term({0, 2, 0}, Int(1));
  b.add_term({0, 0, 1}, Int(1));
  CHECK_THROWS_AS(eliminate_singular_locus(b), EliminationDegenerate);
}

}  // TEST_SUITE
