// Prime fields F_p (word-sized p, primality certified on construction),
// extension fields F_{p^k} with a canonical modulus choice, root finding,
// and a pragmatic irreducibility test over Q by reduction patterns.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubictk/polyring.hpp"

namespace ctk {

// --- F_p elements ----------------------------------------------------------

struct PrimeField {
  long p;
  explicit PrimeField(long p_);  // throws NotPrime unless p is prime
};

struct Fp {
  long v = 0;  // in [0, p)
  long p = 0;  // 0 only for the default-constructed placeholder

  Fp() = default;
  Fp(long value, long prime);  // reduces value mod prime

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v, a.p); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v + a.p, a.p); }
  friend Fp operator*(Fp a, Fp b);
  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }
};

Fp fp_inv(Fp a);  // throws DivisionByZero on 0
Fp fp_pow(Fp a, Int e);
Fp fp_from(const Int& n, long p);
// reduction of a rational with denominator prime to p; throws DivisionByZero
Fp fp_from(const Rational& q, long p);

inline bool is_zero(Fp a) { return a.v == 0; }
inline Fp ring_zero(Fp a) { return Fp(0, a.p); }
inline Fp ring_one(Fp a) { return Fp(1, a.p); }
inline Fp field_inv(Fp a) { return fp_inv(a); }
inline Fp exact_div(Fp a, Fp b) { return a * fp_inv(b); }

inline long ff_char(Fp a) { return a.p; }
inline Int ff_size(Fp a) { return Int(a.p); }
inline Fp ffe_pow(Fp a, const Int& e) { return fp_pow(a, e); }
inline Fp ff_random(Fp a, SplitMix64& rng) {
  return Fp(static_cast<long>(rng.below(static_cast<unsigned long>(a.p))), a.p);
}
inline Int ff_key(Fp a) { return Int(a.v); }

// --- F_{p^k} -----------------------------------------------------------------

// Extension field presented as F_p[x]/(modulus); the modulus is canonical:
// the first monic irreducible of degree k when monic polynomials are
// enumerated by the base-p integer value of their coefficient vector.
struct ExtField {
  long p;
  int k;
  std::vector<long> modulus;  // ascending, size k+1, monic

  Int size() const;  // p^k
};

// Element of a given ExtField. The field object must outlive its elements.
struct FqElem {
  const ExtField* F = nullptr;
  std::vector<long> c;  // ascending, size < k (trailing zeros trimmed)

  FqElem() = default;
  FqElem(const ExtField* field, std::vector<long> coeffs);

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.c == b.c;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
};

FqElem fq_zero(const ExtField& F);
FqElem fq_one(const ExtField& F);
FqElem fq_from(const ExtField& F, long n);
FqElem fq_gen(const ExtField& F);  // the class of x
FqElem fq_inv(const FqElem& a);
FqElem fq_pow(FqElem a, Int e);
FqElem frobenius(const FqElem& a);       // a^p
FqElem embed(Fp a, const ExtField& F);   // F_p -> F_{p^k}
Fp as_prime_field(const FqElem& a);      // inverse of embed; throws if not in F_p

bool is_zero(const FqElem& a);
FqElem ring_zero(const FqElem& a);
FqElem ring_one(const FqElem& a);
FqElem field_inv(const FqElem& a);
inline FqElem exact_div(const FqElem& a, const FqElem& b) {
  return a * field_inv(b);
}

long ff_char(const FqElem& a);
Int ff_size(const FqElem& a);
inline FqElem ffe_pow(const FqElem& a, const Int& e) { return fq_pow(a, e); }
FqElem ff_random(const FqElem& a, SplitMix64& rng);
Int ff_key(const FqElem& a);  // base-p integer value of the coefficient vector

std::string fq_str(const FqElem& a);

// Deterministic modulus search + Rabin irreducibility certificate.
ExtField build_extension(long p, int k);

// Is the monic f in F_p[x] irreducible? (Rabin's test.)
bool is_irreducible_mod_p(const UniPoly<Fp>& f);

// --- roots over a given field ------------------------------------------------

// Roots in K of f with coefficients in K, with multiplicities, sorted by
// canonical key. Deterministic given the seed (the equal-degree split is the
// only randomized step).
template <class K>
std::vector<std::pair<K, unsigned>> field_roots(const UniPoly<K>& f,
                                                SplitMix64& rng) {
  if (f.is_zero_poly()) throw ZeroPolynomial();
  std::vector<std::pair<K, unsigned>> out;
  if (f.degree() < 1) return out;
  auto fm = make_monic(f);
  auto x = UniPoly<K>::monomial(f.zero, 1, ring_one(f.zero));
  // gcd with x^q - x isolates the distinct roots lying in K
  auto xq = pow_mod(x, ff_size(f.zero), fm);
  auto g = poly_gcd(xq - poly_mod(x, fm), fm);
  std::vector<UniPoly<K>> parts;
  if (g.degree() >= 1) detail::edf(g, 1, rng, parts);
  for (auto& lin : parts) {
    K r = ring_zero(f.zero) - lin.at(0);
    UniPoly<K> linear = x - UniPoly<K>::constant(r);
    unsigned mult = 0;
    auto rest = fm;
    for (;;) {
      auto [q, rem] = divmod_field(rest, linear);
      if (!rem.is_zero_poly()) break;
      ++mult;
      rest = std::move(q);
    }
    out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return ff_key(a.first) < ff_key(b.first);
  });
  return out;
}

// Roots of f (coefficients in F_p) inside F_{p^k}, with multiplicities,
// sorted by canonical key. Deterministic given the seed.
std::vector<std::pair<FqElem, unsigned>> roots_in_field(const UniPoly<Fp>& f,
                                                        const ExtField& K,
                                                        SplitMix64& rng);

// Roots in F_p itself.
std::vector<std::pair<Fp, unsigned>> roots_in_prime_field(const UniPoly<Fp>& f,
                                                          SplitMix64& rng);

// --- irreducibility over Q ----------------------------------------------------

struct IrreducibilityWitness {
  long p;                       // witness prime: f mod p irreducible
  std::vector<int> degrees;     // factor degrees at the witness prime
};

// Try primes 2, 3, 5, ... up to `bound`, skipping primes dividing the leading
// coefficient; return the first prime where the reduction is irreducible.
// nullopt = inconclusive (no witness among the primes tried); callers decide
// what that means. `patterns` (optional) receives (p, sorted factor degrees)
// for every prime tried.
std::optional<IrreducibilityWitness> is_irreducible_over_Q(
    const UniPoly<Int>& f, long bound,
    std::vector<std::pair<long, std::vector<int>>>* patterns = nullptr);

// reduce an integer polynomial mod p (throws ZeroPolynomial if it vanishes)
UniPoly<Fp> reduce_mod_p(const UniPoly<Int>& f, long p);

}  // namespace ctk
