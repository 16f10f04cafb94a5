// Truncated p-adic integers with explicit precision, and Newton-Hensel
// lifting of approximate polynomial roots with replayable certificates.
#pragma once

#include <string>

#include "cubictk/polyring.hpp"

namespace ctk {

struct SlopeConditionFailed : std::runtime_error {
  PVal v_f, v_fp;
  SlopeConditionFailed(PVal vf, PVal vfp)
      : std::runtime_error("Newton slope condition v(f(a0)) > 2 v(f'(a0)) fails: v(f(a0)) = " +
                           vf.to_string() + ", v(f'(a0)) = " + vfp.to_string()),
        v_f(vf),
        v_fp(vfp) {}
};
struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted()
      : std::runtime_error("Newton iteration failed to reach target precision") {}
};

// Integer mod p^N. Precision is explicit and never silently increases:
// mixed-precision arithmetic is a logic error.
struct PadicInt {
  long p = 0;
  int N = 0;
  Int residue;  // canonical representative in [0, p^N)

  PadicInt() = default;
  PadicInt(long p_, int N_, const Int& value);

  Int modulus() const;  // p^N

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.p == b.p && a.N == b.N && a.residue == b.residue;
  }

  std::string to_string() const;
};

// Valuation of a truncated value: exact when the residue is nonzero,
// otherwise only the lower bound N is known.
struct PadicValuation {
  bool at_least_precision;  // true: all that is known is v >= N
  long v;                   // exact valuation, or N when at_least_precision

  bool operator==(const PadicValuation& o) const {
    return at_least_precision == o.at_least_precision && v == o.v;
  }
  std::string to_string() const {
    return at_least_precision ? ">=" + std::to_string(v) : std::to_string(v);
  }
};

PadicValuation valuation(const PadicInt& x);

// Proof-carrying result of a Hensel lift: enough data to re-run the Newton
// iteration from scratch and to check the slope condition independently.
struct LiftCertificate {
  long p = 0;
  Int a0;
  PVal v_f;    // v_p(f(a0)); infinite for an exact root
  PVal v_fp;   // v_p(f'(a0))
  Int residue; // the lifted root mod p^N
  int N = 0;

  std::string to_string() const;
};

// Newton-Hensel lift of the approximate root a0 of f to precision N:
// requires v_p(f(a0)) > 2 v_p(f'(a0)); returns a residue r = a0 mod
// p^{v(f')+1} with v_p(f(r)) >= N. Iteration count is capped; the quadratic
// convergence invariant is asserted each step.
LiftCertificate hensel_lift(const UniPoly<Int>& f, long p, const Int& a0, int N);

// Re-run the lift from the certificate's starting data and check every claim:
// slope condition, reproduced residue, basin congruence, and the final
// valuation bound v_p(f(residue)) >= N.
bool replay_lift(const UniPoly<Int>& f, const LiftCertificate& cert);

// p^e as an exact integer
Int int_pow(long p, long e);

}  // namespace ctk
