#include "doctest.h"
#include "test_support.hpp"

using namespace ctk;
using tst::fp_cubic;
using tst::zpoly;

namespace {

// y^2 z = x^3 + A x z^2 + B z^3 as a plane cubic over Q
PlaneCubic<Rational> reference_model(long A, long B) {
  std::array<Rational, 10> a{};
  a[0] = Rational(-1);
  a[5] = Rational(-A);
  a[7] = Rational(1);
  a[9] = Rational(-B);
  return PlaneCubic<Rational>(a);
}

Rational qj(const PlaneCubic<Rational>& C) {
  return j_invariant(jacobian_weierstrass(C));
}

}  // namespace

TEST_SUITE("jacinv") {

TEST_CASE("normalization on the reference model") {
  for (auto [A, B] : {std::pair<long, long>{1, 0}, {0, 1}, {2, 3}, {-3, 2}, {5, -7}}) {
    auto inv = aronhold_invariants(reference_model(A, B));
    CHECK(inv.S == Rational(-48) * Rational(A));
    CHECK(inv.T == Rational(-864) * Rational(B));
    if (Rational(4) * Rational(A * A * A) + Rational(27) * Rational(B * B) != 0) {
      auto W = jacobian_weierstrass(reference_model(A, B));
      CHECK(W.A == Rational(A));
      CHECK(W.B == Rational(B));
    }
  }
}

TEST_CASE("diagonal cubics have S = 0") {
  std::array<Rational, 10> a{};
  a[0] = Rational(5);
  a[6] = Rational(9);
  a[9] = Rational(10);
  auto inv = aronhold_invariants(PlaneCubic<Rational>(a));
  CHECK(is_zero(inv.S));
  CHECK_FALSE(is_zero(inv.T));
}

TEST_CASE("symbolic invariants of the pencil in the parameter") {
  auto u = UniPoly<Int>::monomial(Int(0), 1, Int(1));
  auto C = build_fiber_in<UniPoly<Int>>(u, Constants::standard());
  auto inv = aronhold_invariants(C);
  CHECK(inv.S == zpoly({0, 0, 0, -6998400}));
  CHECK(inv.T == zpoly({1180980000, 0, 0, 11652336000, 0, 0, -7537276800}));
}

TEST_CASE("stored B(t) equals its closed form in the numerator pair") {
  auto N = tst::u_num_poly();
  auto D = tst::u_den_poly();
  auto n3 = N * N * N, d3 = D * D * D;
  auto expected = Int(8723700) * (n3 * n3) - Int(13486500) * (n3 * d3) -
                  Int(1366875) * (d3 * d3);
  CHECK(jacobian_b_of_t() == expected);
}

TEST_CASE("stored B(t) table shape") {
  const auto& b = jacobian_b_of_t();
  CHECK(b.degree() == 72);
  CHECK(b.eval(Int(0)) == -6129675);
  int nonzero = 0;
  for (size_t i = 0; i < b.c.size(); ++i) {
    if (is_zero(b.c[i])) continue;
    ++nonzero;
    CHECK(i % 4 == 0);  // only exponents divisible by 4 occur
  }
  CHECK(nonzero == 19);
}

TEST_CASE("invariant tables are isobaric of the right weight") {
  struct Case {
    const InvariantTable* table;
    int weight;
  };
  for (auto [table, weight] : {Case{&aronhold_s_table(), 4},
                               Case{&aronhold_t_table(), 6}}) {
    CHECK(!table->terms.empty());
    for (const auto& [e, c] : table->terms) {
      CHECK_FALSE(is_zero(c));
      int total = 0;
      std::array<int, 3> w{0, 0, 0};
      for (int i = 0; i < 10; ++i) {
        total += e[static_cast<size_t>(i)];
        for (int v = 0; v < 3; ++v)
          w[static_cast<size_t>(v)] += e[static_cast<size_t>(i)] *
                                       kCubicMonomials[static_cast<size_t>(i)]
                                                      [static_cast<size_t>(v)];
      }
      CHECK(total == weight);
      CHECK(w[0] == weight);
      CHECK(w[1] == weight);
      CHECK(w[2] == weight);
    }
  }
  CHECK(aronhold_s_table().terms.size() == 25);
  CHECK(aronhold_t_table().terms.size() == 103);
}

TEST_CASE("scaling the form scales S by lambda^4 and T by lambda^6") {
  SplitMix64 rng(0x11acu);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<Rational, 10> a{};
    for (auto& x : a) x = tst::random_rational(rng);
    a[0] = a[0] + Rational(1);  // keep it nonzero
    PlaneCubic<Rational> C(a);
    auto inv = aronhold_invariants(C);
    Rational lam(3, 2);
    auto scaled = map_cubic<Rational, Rational>(C, [&](const Rational& x) {
      return lam * x;
    });
    auto sinv = aronhold_invariants(scaled);
    Rational l4 = lam * lam * lam * lam;
    CHECK(sinv.S == l4 * inv.S);
    CHECK(sinv.T == l4 * lam * lam * inv.T);
  }
}

TEST_CASE("S and T are invariant under unimodular substitutions") {
  SplitMix64 rng(0x5434u);
  auto W1 = build_fiber(Rational(1));
  auto inv = aronhold_invariants(W1);
  for (int trial = 0; trial < 8; ++trial) {
    // random upper/lower shears compose to a determinant-1 matrix
    Rational s(static_cast<long>(rng.below(9)) - 4);
    Rational t(static_cast<long>(rng.below(9)) - 4);
    std::array<std::array<Rational, 3>, 3> m{{{Rational(1), s, Rational(0)},
                                              {Rational(0), Rational(1), t},
                                              {Rational(0), Rational(0), Rational(1)}}};
    auto moved = compose_linear(W1, m);
    auto minv = aronhold_invariants(moved);
    CHECK(minv.S == inv.S);
    CHECK(minv.T == inv.T);
  }
}

TEST_CASE("j is a projective invariant") {
  SplitMix64 rng(0x10a0u);
  auto C = build_fiber(Rational(1));
  Rational j0 = qj(C);
  int tested = 0;
  while (tested < 6) {
    std::array<std::array<Rational, 3>, 3> m;
    for (auto& row : m)
      for (auto& x : row) x = Rational(static_cast<long>(rng.below(7)) - 3);
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (is_zero(det)) continue;
    ++tested;
    CHECK(qj(compose_linear(C, m)) == j0);
  }
}

TEST_CASE("weierstrass discriminant and j special values") {
  CHECK(weierstrass_discriminant(WeierstrassCurve<Rational>{Rational(1), Rational(1)}) ==
        Rational(-496));
  CHECK(weierstrass_discriminant(WeierstrassCurve<Rational>{Rational(-3), Rational(2)}) ==
        Rational(0));
  CHECK(j_invariant(WeierstrassCurve<Rational>{Rational(1), Rational(0)}) ==
        Rational(1728));
  CHECK(j_invariant(WeierstrassCurve<Rational>{Rational(0), Rational(1)}) ==
        Rational(0));
  CHECK_THROWS_AS(
      j_invariant(WeierstrassCurve<Rational>{Rational(-3), Rational(2)}),
      SingularCurve);
}

TEST_CASE("jacobian of the u = 1 fiber") {
  auto W = jacobian_weierstrass(build_fiber(Rational(1)));
  CHECK(W.A == Rational(145800));
  CHECK(W.B == Rational(-6129675));
  CHECK(weierstrass_discriminant(W) == Rational(Int("-214590789909630000")));
  CHECK(j_invariant(W) == Rational(Int(21499084800), Int(13459681)));
}

TEST_CASE("jacobians separate fibers along the family") {
  auto u2 = u_of_t(Rational(2));
  REQUIRE_FALSE(u2.infinite);
  CHECK(u2.v == Rational(4079, 3839));
  auto j0 = qj(build_fiber(Rational(1)));
  auto j2 = qj(build_fiber(u2.v));
  CHECK_FALSE(j0 == j2);
}

TEST_CASE("singular inputs are rejected") {
  // cusp y^2 z = x^3: S = T = 0, no Jacobian
  std::array<Rational, 10> a{};
  a[0] = Rational(-1);
  a[7] = Rational(1);
  CHECK_THROWS_AS(jacobian_weierstrass(PlaneCubic<Rational>(a)), SingularCubic);
}

TEST_CASE("fibers over eliminant roots are exactly the singular ones") {
  SplitMix64 rng(0x151du);
  auto F = build_extension(7, 12);
  auto roots = roots_in_field(reduce_mod_p(tst::sing12(), 7), F, rng);
  REQUIRE(roots.size() == 12);
  const auto kc = Constants::standard();
  int checked = 0;
  for (auto& [root, mult] : roots) {
    if (++checked > 3) break;  // three is plenty; they are Galois conjugates
    auto C = build_fiber_in<FqElem>(root, kc);
    auto inv = aronhold_invariants(C);
    // avoid jacobian_weierstrass so the vanishing disc is observable
    auto A = exact_div(ring_zero(inv.S) - inv.S, small_int_in(48, inv.S));
    auto B = exact_div(ring_zero(inv.T) - inv.T, small_int_in(864, inv.T));
    CHECK(is_zero(weierstrass_discriminant(WeierstrassCurve<FqElem>{A, B})));
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto u = ff_random(fq_zero(F), rng);
    bool is_root = false;
    for (auto& [root, mult] : roots) is_root = is_root || u == root;
    if (is_root) continue;
    auto C = build_fiber_in<FqElem>(u, kc);
    auto inv = aronhold_invariants(C);
    auto A = exact_div(ring_zero(inv.S) - inv.S, small_int_in(48, inv.S));
    auto B = exact_div(ring_zero(inv.T) - inv.T, small_int_in(864, inv.T));
    CHECK_FALSE(is_zero(weierstrass_discriminant(WeierstrassCurve<FqElem>{A, B})));
  }
}

TEST_CASE("small_int_in") {
  CHECK(small_int_in(7, Fp(0, 5)) == Fp(2, 5));
  CHECK(small_int_in(-3, Int(0)) == Int(-3));
  CHECK(small_int_in(0, Rational(1)) == Rational(0));
  CHECK(small_int_in(1000, Int(0)) == Int(1000));
  auto F = build_extension(2, 3);
  CHECK(small_int_in(5, fq_zero(F)) == fq_one(F));  // 5 = 1 in F_8
}

TEST_CASE("invariants refuse characteristics 2 and 3") {
  CHECK_THROWS_AS(aronhold_invariants(fp_cubic(2, {1, 0, 0, 0, 1, 0, 1, 0, 0, 0})),
                  BadCharacteristic);
  CHECK_THROWS_AS(aronhold_invariants(fp_cubic(3, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1})),
                  BadCharacteristic);
}

}  // TEST_SUITE
