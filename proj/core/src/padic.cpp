#include "cubictk/padic.hpp"

#include <algorithm>

namespace ctk {

Int int_pow(long p, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return r;
}

PadicInt::PadicInt(long p_, int N_, const Int& value) : p(p_), N(N_) {
  if (!is_prime_long(p)) throw NotPrime(p);
  if (N < 1) throw std::logic_error("PadicInt: precision must be positive");
  Int m = modulus();
  mpz_fdiv_r(residue.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
}

Int PadicInt::modulus() const { return int_pow(p, N); }

namespace {
void check_compatible(const PadicInt& a, const PadicInt& b) {
  if (a.p != b.p || a.N != b.N)
    throw std::logic_error("PadicInt: mixed precision or prime");
}
}  // namespace

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  check_compatible(a, b);
  return PadicInt(a.p, a.N, a.residue + b.residue);
}
PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  check_compatible(a, b);
  return PadicInt(a.p, a.N, a.residue - b.residue);
}
PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  check_compatible(a, b);
  return PadicInt(a.p, a.N, a.residue * b.residue);
}

std::string PadicInt::to_string() const {
  return residue.get_str() + " mod " + std::to_string(p) + "^" +
         std::to_string(N);
}

PadicValuation valuation(const PadicInt& x) {
  if (sgn(x.residue) == 0) return {true, x.N};
  return {false, p_valuation_nonzero(x.residue, x.p)};
}

std::string LiftCertificate::to_string() const {
  return "p=" + std::to_string(p) + " a0=" + a0.get_str() + " v(f(a0))=" +
         v_f.to_string() + " v(f'(a0))=" + v_fp.to_string() + " root=" +
         residue.get_str() + " mod p^" + std::to_string(N);
}

LiftCertificate hensel_lift(const UniPoly<Int>& f, long p, const Int& a0,
                            int N) {
  if (!is_prime_long(p)) throw NotPrime(p);
  if (f.is_zero_poly()) throw ZeroPolynomial();
  if (N < 1 || N > 100000) throw PrecisionExhausted();

  const auto fd = f.derivative();
  const Int fa0 = f.eval(a0);
  const Int fpa0 = fd.eval(a0);
  const PVal v_f = p_valuation(fa0, p);
  const PVal v_fp = p_valuation(fpa0, p);

  LiftCertificate cert{p, a0, v_f, v_fp, Int(0), N};
  const Int pN = int_pow(p, N);

  if (v_f.infinite) {  // exact root; nothing to iterate
    mpz_fdiv_r(cert.residue.get_mpz_t(), a0.get_mpz_t(), pN.get_mpz_t());
    return cert;
  }
  // slope condition v(f(a0)) > 2 v(f'(a0))
  if (v_fp.infinite || v_f.v <= 2 * v_fp.v)
    throw SlopeConditionFailed(v_f, v_fp);

  const long v2 = v_fp.v;
  const int M = N + static_cast<int>(2 * v2) + 2;  // working precision
  const Int pM = int_pow(p, M);
  const Int pv2 = int_pow(p, v2);

  Int a;
  mpz_fdiv_r(a.get_mpz_t(), a0.get_mpz_t(), pM.get_mpz_t());
  PVal vcur = v_f;
  for (int it = 0; it < 64; ++it) {
    Int fa = f.eval(a);
    PVal v1 = p_valuation(fa, p);
    // quadratic convergence: v(f(a_{k+1})) >= 2 v(f(a_k)) - 2 v(f'), capped
    // at the target N — beyond N the truncation to the working precision M
    // can hide valuation (guaranteed visible only up to M - v2 > N)
    long expect = std::min<long>(2 * vcur.v - 2 * v2, N);
    if (it > 0 && !v1.infinite && v1.v < expect)
      throw std::logic_error("hensel_lift: convergence invariant violated");
    vcur = v1.infinite ? PVal::fin(2 * vcur.v) : v1;
    if (v1.infinite || v1.v >= N) {
      mpz_fdiv_r(cert.residue.get_mpz_t(), a.get_mpz_t(), pN.get_mpz_t());
      return cert;
    }
    Int fpa = fd.eval(a);
    if (p_valuation(fpa, p) != PVal::fin(v2))
      throw std::logic_error("hensel_lift: derivative valuation drifted");
    Int t = fa / pv2;       // exact: v(fa) > 2 v2 >= v2
    Int w = fpa / pv2;      // exact unit part
    Int winv;
    if (mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), pM.get_mpz_t()) == 0)
      throw std::logic_error("hensel_lift: unit part not invertible");
    Int anext = a - t * winv;
    mpz_fdiv_r(a.get_mpz_t(), anext.get_mpz_t(), pM.get_mpz_t());
  }
  throw PrecisionExhausted();
}

bool replay_lift(const UniPoly<Int>& f, const LiftCertificate& cert) {
  LiftCertificate redo;
  try {
    redo = hensel_lift(f, cert.p, cert.a0, cert.N);
  } catch (const std::exception&) {
    return false;
  }
  if (redo.residue != cert.residue || !(redo.v_f == cert.v_f) ||
      !(redo.v_fp == cert.v_fp))
    return false;
  // final valuation bound: v_p(f(residue)) >= N
  Int fr = f.eval(cert.residue);
  PVal vfr = p_valuation(fr, cert.p);
  if (!vfr.infinite && vfr.v < cert.N) return false;
  // basin congruence: residue == a0 mod p^{v(f')+1}
  if (!cert.v_fp.infinite) {
    long e = std::min<long>(cert.v_fp.v + 1, cert.N);
    Int m = int_pow(cert.p, e);
    Int d = cert.residue - cert.a0;
    if (!mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t())) return false;
  }
  return true;
}

}  // namespace ctk
