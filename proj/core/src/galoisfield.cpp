#include "cubictk/galoisfield.hpp"

#include <algorithm>

namespace ctk {

// --- F_p ---------------------------------------------------------------------

PrimeField::PrimeField(long p_) : p(p_) {
  if (!is_prime_long(p)) throw NotPrime(p);
}

Fp::Fp(long value, long prime) : p(prime) {
  v = value % prime;
  if (v < 0) v += prime;
}

Fp operator*(Fp a, Fp b) {
  unsigned __int128 t =
      static_cast<unsigned __int128>(a.v) * static_cast<unsigned __int128>(b.v);
  return Fp{static_cast<long>(t % static_cast<unsigned long>(a.p)), a.p};
}

Fp fp_inv(Fp a) {
  if (a.v == 0) throw DivisionByZero();
  long r0 = a.p, r1 = a.v, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return Fp(s0, a.p);
}

Fp fp_pow(Fp a, Int e) {
  if (sgn(e) < 0) {
    a = fp_inv(a);
    e = -e;
  }
  Fp r(1, a.p);
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0;
       --i) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * a;
  }
  return sgn(e) == 0 ? Fp(1, a.p) : r;
}

Fp fp_from(const Int& n, long p) {
  unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
  return Fp(static_cast<long>(r), p);
}

Fp fp_from(const Rational& q, long p) {
  Fp num = fp_from(Int(q.get_num()), p);
  Fp den = fp_from(Int(q.get_den()), p);
  return num * fp_inv(den);
}

// --- F_{p^k} -------------------------------------------------------------------

Int ExtField::size() const {
  Int s;
  mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return s;
}

FqElem::FqElem(const ExtField* field, std::vector<long> coeffs)
    : F(field), c(std::move(coeffs)) {
  for (auto& x : c) {
    x %= F->p;
    if (x < 0) x += F->p;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return FqElem(a.F, std::move(r));
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return FqElem(a.F, std::move(r));
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  const ExtField* F = a.F;
  if (a.c.empty() || b.c.empty()) return FqElem(F, {});
  const long p = F->p;
  const size_t k = static_cast<size_t>(F->k);
  std::vector<__int128> conv(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      conv[i + j] += static_cast<__int128>(a.c[i]) * b.c[j];
  // long division by the monic modulus
  for (size_t i = conv.size(); i-- > k;) {
    long t = static_cast<long>(conv[i] % p);
    if (t < 0) t += p;
    if (t == 0) continue;
    for (size_t j = 0; j < k; ++j)
      conv[i - k + j] -= static_cast<__int128>(t) * F->modulus[j];
  }
  std::vector<long> r(k, 0);
  for (size_t j = 0; j < k && j < conv.size(); ++j) {
    long t = static_cast<long>(conv[j] % p);
    if (t < 0) t += p;
    r[j] = t;
  }
  return FqElem(F, std::move(r));
}

FqElem fq_zero(const ExtField& F) { return FqElem(&F, {}); }
FqElem fq_one(const ExtField& F) { return FqElem(&F, {1}); }
FqElem fq_from(const ExtField& F, long n) { return FqElem(&F, {n}); }
FqElem fq_gen(const ExtField& F) { return FqElem(&F, {0, 1}); }

FqElem fq_pow(FqElem a, Int e) {
  if (sgn(e) < 0) {
    a = fq_inv(a);
    e = -e;
  }
  FqElem r = fq_one(*a.F);
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0;
       --i) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * a;
  }
  return sgn(e) == 0 ? fq_one(*a.F) : r;
}

FqElem fq_inv(const FqElem& a) {
  if (a.c.empty()) throw DivisionByZero();
  return fq_pow(a, a.F->size() - 2);
}

FqElem frobenius(const FqElem& a) { return fq_pow(a, Int(a.F->p)); }

FqElem embed(Fp a, const ExtField& F) { return FqElem(&F, {a.v}); }

Fp as_prime_field(const FqElem& a) {
  if (a.c.size() > 1)
    throw std::logic_error("as_prime_field: element outside the prime field");
  return Fp(a.c.empty() ? 0 : a.c[0], a.F->p);
}

bool is_zero(const FqElem& a) { return a.c.empty(); }
FqElem ring_zero(const FqElem& a) { return FqElem(a.F, {}); }
FqElem ring_one(const FqElem& a) { return FqElem(a.F, {1}); }
FqElem field_inv(const FqElem& a) { return fq_inv(a); }

long ff_char(const FqElem& a) { return a.F->p; }
Int ff_size(const FqElem& a) { return a.F->size(); }

FqElem ff_random(const FqElem& a, SplitMix64& rng) {
  std::vector<long> c(static_cast<size_t>(a.F->k));
  for (auto& x : c)
    x = static_cast<long>(rng.below(static_cast<unsigned long>(a.F->p)));
  return FqElem(a.F, std::move(c));
}

Int ff_key(const FqElem& a) {
  Int key = 0;
  for (size_t i = a.c.size(); i-- > 0;) key = key * a.F->p + a.c[i];
  return key;
}

std::string fq_str(const FqElem& a) {
  if (a.c.empty()) return "0";
  std::string s;
  for (size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(a.c[i]);
    if (i > 0) s += "*w" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s;
}

// --- modulus search ------------------------------------------------------------

bool is_irreducible_mod_p(const UniPoly<Fp>& f) {
  const int k = f.degree();
  if (k < 1) return false;
  const long p = f.zero.p;
  auto x = UniPoly<Fp>::monomial(f.zero, 1, ring_one(f.zero));
  auto ppow = [&](int j) {
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(j));
    return e;
  };
  // x^{p^k} == x mod f
  if (!(pow_mod(x, ppow(k), f) == poly_mod(x, f))) return false;
  // gcd(x^{p^{k/q}} - x, f) == 1 for every prime q | k
  int rem = k;
  for (int q = 2; q <= rem; ++q) {
    if (rem % q != 0) continue;
    while (rem % q == 0) rem /= q;
    auto g = poly_gcd(pow_mod(x, ppow(k / q), f) - poly_mod(x, f), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

ExtField build_extension(long p, int k) {
  if (!is_prime_long(p)) throw NotPrime(p);
  if (k < 1) throw std::logic_error("build_extension: k must be >= 1");
  ExtField F{p, k, {}};
  // enumerate monic degree-k polynomials by the base-p integer value of the
  // lower coefficient vector; the first irreducible is the modulus
  Int limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  for (Int val = 0; val < limit; ++val) {
    std::vector<long> mod(static_cast<size_t>(k) + 1, 0);
    Int v = val;
    for (int i = 0; i < k; ++i) {
      mod[static_cast<size_t>(i)] =
          static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
      v /= p;
    }
    mod[static_cast<size_t>(k)] = 1;
    UniPoly<Fp> f(Fp(0, p));
    f.c.reserve(mod.size());
    for (long cc : mod) f.c.push_back(Fp(cc, p));
    f.normalize();
    if (is_irreducible_mod_p(f)) {
      F.modulus = std::move(mod);
      return F;
    }
  }
  throw std::logic_error("build_extension: no irreducible found");  // unreachable
}

// --- roots ---------------------------------------------------------------------

UniPoly<Fp> reduce_mod_p(const UniPoly<Int>& f, long p) {
  UniPoly<Fp> r(Fp(0, p));
  r.c.reserve(f.c.size());
  for (auto& x : f.c) r.c.push_back(fp_from(x, p));
  r.normalize();
  if (r.is_zero_poly() && !f.is_zero_poly()) throw ZeroPolynomial();
  return r;
}

std::vector<std::pair<FqElem, unsigned>> roots_in_field(const UniPoly<Fp>& f,
                                                        const ExtField& K,
                                                        SplitMix64& rng) {
  if (f.is_zero_poly()) throw ZeroPolynomial();
  if (f.zero.p != K.p)
    throw std::logic_error("roots_in_field: characteristic mismatch");
  UniPoly<FqElem> fhat(fq_zero(K));
  fhat.c.reserve(f.c.size());
  for (auto& x : f.c) fhat.c.push_back(embed(x, K));
  fhat.normalize();
  return field_roots(fhat, rng);
}

std::vector<std::pair<Fp, unsigned>> roots_in_prime_field(const UniPoly<Fp>& f,
                                                          SplitMix64& rng) {
  return field_roots(f, rng);
}

// --- irreducibility over Q -------------------------------------------------------

std::optional<IrreducibilityWitness> is_irreducible_over_Q(
    const UniPoly<Int>& f, long bound,
    std::vector<std::pair<long, std::vector<int>>>* patterns) {
  if (f.is_zero_poly()) throw ZeroPolynomial();
  const int deg = f.degree();
  for (long p = 2; p <= bound; ++p) {
    if (!is_prime_long(p)) continue;
    if (mpz_fdiv_ui(f.lc().get_mpz_t(), static_cast<unsigned long>(p)) == 0)
      continue;  // degree would drop
    auto fp = reduce_mod_p(f, p);
    SplitMix64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<unsigned long>(p));
    auto fac = factor_ff(fp, rng);
    std::vector<int> degs;
    for (auto& [g, m] : fac.factors)
      for (unsigned i = 0; i < m; ++i) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    if (patterns) patterns->emplace_back(p, degs);
    if (degs.size() == 1 && degs[0] == deg)
      return IrreducibilityWitness{p, degs};
  }
  return std::nullopt;
}

}  // namespace ctk
