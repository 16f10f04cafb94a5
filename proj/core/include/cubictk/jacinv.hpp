#pragma once

#include "cubictk/cubicgeom.hpp"
#include "cubictk/tables.hpp"

namespace ctk {

struct BadCharacteristic : std::runtime_error {
  explicit BadCharacteristic(long p)
      : std::runtime_error("cubic invariants undefined in characteristic " +
                           std::to_string(p)) {}
};

struct SingularCubic : std::runtime_error {
  SingularCubic()
      : std::runtime_error("Weierstrass discriminant vanishes: no Jacobian") {}
};

struct SingularCurve : std::runtime_error {
  SingularCurve() : std::runtime_error("4A^3 + 27B^2 = 0: j undefined") {}
};

void require_invariant_characteristic(long ch);

// characteristic of the coefficient ring
inline long ring_characteristic(const Int&) { return 0; }
inline long ring_characteristic(const Rational&) { return 0; }
inline long ring_characteristic(Fp a) { return a.p; }
inline long ring_characteristic(const FqElem& a) { return a.F->p; }
template <class K>
long ring_characteristic(const UniPoly<K>& f) {
  return ring_characteristic(f.zero);
}

// n as an element of K, by binary doubling
template <class K>
K small_int_in(long n, const K& like) {
  K acc = ring_zero(like);
  K pw = ring_one(like);
  unsigned long m =
      n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  while (m != 0) {
    if (m & 1) acc = acc + pw;
    m >>= 1;
    if (m != 0) pw = pw + pw;
  }
  return n < 0 ? ring_zero(like) - acc : acc;
}

// classical degree-4 and degree-6 invariants of a ternary cubic, normalized
// so that the reference model y^2 z - x^3 - A x z^2 - B z^3 has S = -48 A
// and T = -864 B
template <class K>
struct AronholdInvariants {
  K S;
  K T;
};

template <class K>
AronholdInvariants<K> aronhold_invariants(const PlaneCubic<K>& C) {
  require_invariant_characteristic(ring_characteristic(C.a[0]));
  return {aronhold_s_table().eval(C.a), aronhold_t_table().eval(C.a)};
}

template <class K>
struct WeierstrassCurve {
  K A;
  K B;
};

template <class K>
K weierstrass_discriminant(const WeierstrassCurve<K>& W) {
  K d = small_int_in(4, W.A) * (W.A * W.A * W.A) +
        small_int_in(27, W.A) * (W.B * W.B);
  return small_int_in(-16, W.A) * d;
}

// y^2 = x^3 + A x + B with A = -S/48, B = -T/864 (constants frozen by the
// reference-model normalization above)
template <class K>
WeierstrassCurve<K> jacobian_weierstrass(const PlaneCubic<K>& C) {
  auto inv = aronhold_invariants(C);
  WeierstrassCurve<K> W{exact_div(-inv.S, small_int_in(48, inv.S)),
                        exact_div(-inv.T, small_int_in(864, inv.T))};
  if (is_zero(weierstrass_discriminant(W))) throw SingularCubic();
  return W;
}

template <class K>
K j_invariant(const WeierstrassCurve<K>& W) {
  K a3 = small_int_in(4, W.A) * (W.A * W.A * W.A);
  K den = a3 + small_int_in(27, W.A) * (W.B * W.B);
  if (is_zero(den)) throw SingularCurve();
  return exact_div(small_int_in(1728, W.A) * a3, den);
}

}  // namespace ctk
