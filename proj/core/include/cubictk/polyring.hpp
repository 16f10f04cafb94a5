// Exact polynomial arithmetic: dense univariate and sparse multivariate
// polynomials over an exact coefficient ring, Sylvester/Bareiss resultants,
// discriminants, gcds and squarefree parts, finite-field factorization
// (squarefree / distinct-degree / equal-degree), and the iterated-resultant
// elimination of the singular locus of a one-parameter family.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubictk/exactnum.hpp"

namespace ctk {

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("zero polynomial not allowed here") {}
};
struct DegreeTooSmall : std::runtime_error {
  DegreeTooSmall() : std::runtime_error("degree too small for discriminant") {}
};
struct EliminationDegenerate : std::runtime_error {
  EliminationDegenerate()
      : std::runtime_error("iterated resultants vanish identically") {}
};

// ---------------------------------------------------------------------------
// UniPoly: dense univariate polynomial, coefficients ascending by degree.
// Carries a context zero element so coefficient rings with runtime context
// (prime fields, extension fields) work uniformly.
// ---------------------------------------------------------------------------
template <class K>
struct UniPoly {
  K zero;
  std::vector<K> c;  // c[i] multiplies x^i; no trailing zeros

  explicit UniPoly(K z) : zero(std::move(z)) {}
  UniPoly(K z, std::vector<K> cc) : zero(std::move(z)), c(std::move(cc)) {
    normalize();
  }

  void normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  bool is_zero_poly() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const K& lc() const {
    if (c.empty()) throw ZeroPolynomial();
    return c.back();
  }
  const K& at(size_t i) const { return i < c.size() ? c[i] : zero; }

  static UniPoly constant(K v) {
    UniPoly p(ring_zero(v));
    if (!is_zero(v)) p.c.push_back(std::move(v));
    return p;
  }
  // x^n with the given context
  static UniPoly monomial(const K& zero_like, size_t n, const K& coeff) {
    UniPoly p(ring_zero(zero_like));
    if (!is_zero(coeff)) {
      p.c.assign(n + 1, ring_zero(zero_like));
      p.c[n] = coeff;
    }
    return p;
  }

  K eval(const K& x) const {  // Horner
    K acc = zero;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  UniPoly derivative() const {
    UniPoly d(zero);
    for (size_t i = 1; i < c.size(); ++i) {
      K t = c[i];
      for (size_t j = 1; j < i; ++j) t = t + c[i];  // i * c[i] without int*K
      d.c.push_back(t);
    }
    d.normalize();
    return d;
  }

  bool operator==(const UniPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }

  UniPoly operator-() const {
    UniPoly r(zero);
    r.c.reserve(c.size());
    for (auto& x : c) r.c.push_back(zero - x);
    return r;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.zero);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.zero);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
    r.normalize();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.zero);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.zero);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    r.normalize();
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.zero);
    if (a.is_zero_poly() || b.is_zero_poly()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.zero);
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
  }
  friend UniPoly operator*(const K& s, const UniPoly& a) {
    UniPoly r(a.zero);
    if (is_zero(s)) return r;
    r.c.reserve(a.c.size());
    for (auto& x : a.c) r.c.push_back(s * x);
    r.normalize();
    return r;
  }

  std::string to_string(const std::string& var = "x") const;
};

template <class K>
bool is_zero(const UniPoly<K>& p) {
  return p.is_zero_poly();
}
template <class K>
UniPoly<K> ring_zero(const UniPoly<K>& p) {
  return UniPoly<K>(p.zero);
}
template <class K>
UniPoly<K> ring_one(const UniPoly<K>& p) {
  return UniPoly<K>::constant(ring_one(p.zero));
}

// Exact division in K[x] (throws if not exact); valid whenever the quotient
// exists in the coefficient ring, which Bareiss elimination guarantees.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero_poly()) throw DivisionByZero();
  UniPoly<K> r = a;
  UniPoly<K> q(a.zero);
  if (a.is_zero_poly()) return q;
  if (r.degree() < b.degree()) throw std::logic_error("exact_div(poly): not divisible");
  q.c.assign(r.degree() - b.degree() + 1, a.zero);
  while (!r.is_zero_poly() && r.degree() >= b.degree()) {
    size_t shift = r.degree() - b.degree();
    K t = exact_div(r.lc(), b.lc());
    q.c[shift] = t;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = r.c[shift + i] - t * b.c[i];
    r.normalize();
  }
  if (!r.is_zero_poly()) throw std::logic_error("exact_div(poly): remainder");
  q.normalize();
  return q;
}

// Division with remainder over a field (needs field_inv on K).
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod_field(const UniPoly<K>& a,
                                               const UniPoly<K>& b) {
  if (b.is_zero_poly()) throw DivisionByZero();
  UniPoly<K> r = a, q(a.zero);
  if (a.is_zero_poly() || a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, a.zero);
  K binv = field_inv(b.lc());
  while (!r.is_zero_poly() && r.degree() >= b.degree()) {
    size_t shift = r.degree() - b.degree();
    K t = r.lc() * binv;
    q.c[shift] = q.c[shift] + t;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = r.c[shift + i] - t * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

template <class K>
UniPoly<K> poly_mod(const UniPoly<K>& a, const UniPoly<K>& m) {
  return divmod_field(a, m).second;
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& f) {
  if (f.is_zero_poly()) return f;
  return field_inv(f.lc()) * f;
}

// Monic gcd over a field.
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero_poly()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero_poly() ? a : make_monic(a);
}

// Modular exponentiation in K[x]/(m), exponent an arbitrary-precision integer.
template <class K>
UniPoly<K> pow_mod(const UniPoly<K>& base, const Int& e, const UniPoly<K>& m) {
  UniPoly<K> result = poly_mod(ring_one(base), m);
  UniPoly<K> b = poly_mod(base, m);
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0;
       --i) {
    result = poly_mod(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = poly_mod(result * b, m);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Determinant by Bareiss fraction-free elimination (exact in any integral
// domain: every division is exact by construction).
// ---------------------------------------------------------------------------
template <class K>
K bareiss_det(std::vector<std::vector<K>> a) {
  const size_t n = a.size();
  if (n == 0) throw std::logic_error("bareiss_det: empty matrix");
  K one = ring_one(a[0][0]);
  K prev = one;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && is_zero(a[piv][k])) ++piv;
    if (piv == n) return ring_zero(one);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = ring_zero(one);
    }
    prev = a[k][k];
  }
  K det = a[n - 1][n - 1];
  return sign < 0 ? ring_zero(one) - det : det;
}

// Sylvester resultant of f, g with respect to their (shared) variable.
// Degree-zero edge cases follow the classical conventions:
//   Res(c, g) = c^{deg g}, Res(f, c) = c^{deg f}, Res(c, d) = 1.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g) {
  if (f.is_zero_poly() || g.is_zero_poly()) throw ZeroPolynomial();
  const int m = f.degree(), n = g.degree();
  K one = ring_one(f.zero);
  auto kpow = [&](K b, int e) {
    K r = one;
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
  };
  if (m == 0 && n == 0) return one;
  if (m == 0) return kpow(f.c[0], n);
  if (n == 0) return kpow(g.c[0], m);
  std::vector<std::vector<K>> s(m + n, std::vector<K>(m + n, f.zero));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = f.c[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = g.c[i];
  return bareiss_det(std::move(s));
}

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)
template <class K>
K discriminant(const UniPoly<K>& f) {
  if (f.degree() < 2) throw DegreeTooSmall();
  K res = resultant(f, f.derivative());
  K d = exact_div(res, f.lc());
  const long deg = f.degree();
  if (((deg * (deg - 1)) / 2) % 2 != 0) d = ring_zero(d) - d;
  return d;
}

// ---------------------------------------------------------------------------
// Content / primitive part over Z and the Z <-> Q normalizations used by the
// elimination pipeline.
// ---------------------------------------------------------------------------
inline Int content(const UniPoly<Int>& f) {
  Int g(0);
  for (auto& x : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

// primitive part with positive leading coefficient
inline UniPoly<Int> primitive_part(const UniPoly<Int>& f) {
  if (f.is_zero_poly()) return f;
  Int g = content(f);
  if (sgn(f.lc()) < 0) g = -g;
  UniPoly<Int> r(Int(0));
  r.c.reserve(f.c.size());
  for (auto& x : f.c) r.c.push_back(exact_div(x, g));
  r.normalize();
  return r;
}

inline UniPoly<Rational> to_rational(const UniPoly<Int>& f) {
  UniPoly<Rational> r((Rational(0)));
  r.c.reserve(f.c.size());
  for (auto& x : f.c) r.c.emplace_back(x);
  r.normalize();
  return r;
}

// clear denominators, divide by content, force positive leading coefficient
inline UniPoly<Int> primitive_integer(const UniPoly<Rational>& f) {
  UniPoly<Int> r(Int(0));
  if (f.is_zero_poly()) return r;
  Int l(1);
  for (auto& x : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  r.c.reserve(f.c.size());
  for (auto& x : f.c) {
    Rational t = x * Rational(l);
    r.c.push_back(t.get_num());
  }
  r.normalize();
  return primitive_part(r);
}

// gcd over Z via the monic gcd over Q, returned primitive with positive lc
inline UniPoly<Int> gcd_primitive(const UniPoly<Int>& a, const UniPoly<Int>& b) {
  if (a.is_zero_poly()) return primitive_part(b);
  if (b.is_zero_poly()) return primitive_part(a);
  return primitive_integer(poly_gcd(to_rational(a), to_rational(b)));
}

// squarefree part over Q (characteristic zero): f / gcd(f, f')
inline UniPoly<Rational> squarefree_part(const UniPoly<Rational>& f) {
  if (f.is_zero_poly()) throw ZeroPolynomial();
  if (f.degree() < 1) return ring_one(f);
  auto g = poly_gcd(f, f.derivative());
  return make_monic(divmod_field(f, g).first);
}

// spec op: (gcd(f, f'), squarefree part), both monic-normalized. Works over
// any field; in characteristic p a vanishing derivative is handled by the
// full squarefree decomposition in sqf_decompose (this simple form is the
// characteristic-zero / generic entry point).
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> gcd_and_squarefree_part(const UniPoly<K>& f) {
  if (f.is_zero_poly()) throw ZeroPolynomial();
  if (f.degree() < 1) return {ring_one(f), ring_one(f)};
  auto g = poly_gcd(f, f.derivative());
  if (g.degree() == f.degree())  // f' == 0 (char p inseparable): f/g = 1
    return {g, ring_one(f)};
  return {g, make_monic(divmod_field(f, g).first)};
}

// ---------------------------------------------------------------------------
// Finite-field factorization. K must provide the finite-field hooks
// ff_char(K), ff_size(K) -> Int, ffe_pow(K, Int), ff_random(K, SplitMix64&),
// ff_key(K) -> Int (canonical sort key) in addition to the ring hooks.
// ---------------------------------------------------------------------------

// p-th root of an inseparable polynomial g(x^p) -> g-like root polynomial
template <class K>
UniPoly<K> inseparable_root(const UniPoly<K>& f) {
  const long p = ff_char(f.zero);
  const Int q = ff_size(f.zero);
  UniPoly<K> r(f.zero);
  r.c.assign(f.degree() / p + 1, f.zero);
  for (int i = 0; i * p <= f.degree(); ++i)
    r.c[i] = ffe_pow(f.at(static_cast<size_t>(i) * p), q / p);  // Frobenius inverse
  r.normalize();
  return r;
}

// Squarefree decomposition (monic input), characteristic p aware.
template <class K>
std::vector<std::pair<UniPoly<K>, unsigned>> sqf_decompose(UniPoly<K> f,
                                                           unsigned mult = 1) {
  std::vector<std::pair<UniPoly<K>, unsigned>> out;
  if (f.degree() < 1) return out;
  auto fp = f.derivative();
  if (fp.is_zero_poly()) {
    for (auto& [g, m] : sqf_decompose(inseparable_root(f), 1))
      out.emplace_back(g, m * mult * static_cast<unsigned>(ff_char(f.zero)));
    return out;
  }
  auto g = poly_gcd(f, fp);
  auto w = divmod_field(f, g).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    auto y = poly_gcd(w, g);
    auto fac = divmod_field(w, y).first;
    if (fac.degree() > 0) out.emplace_back(make_monic(fac), i * mult);
    w = std::move(y);
    g = divmod_field(g, w).first;
    ++i;
  }
  if (g.degree() > 0)
    for (auto& [h, m] : sqf_decompose(inseparable_root(g), 1))
      out.emplace_back(h, m * mult * static_cast<unsigned>(ff_char(f.zero)));
  return out;
}

namespace detail {

// canonical ordering of monic polynomials over a finite field
template <class K>
bool poly_less(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    Int ka = ff_key(a.at(static_cast<size_t>(i)));
    Int kb = ff_key(b.at(static_cast<size_t>(i)));
    if (ka != kb) return ka < kb;
  }
  return false;
}

template <class K>
UniPoly<K> random_poly_below(const UniPoly<K>& mod, SplitMix64& rng) {
  UniPoly<K> r(mod.zero);
  const int d = mod.degree();
  r.c.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) r.c.push_back(ff_random(mod.zero, rng));
  r.normalize();
  return r;
}

// equal-degree splitting of a monic squarefree product of degree-d primes
template <class K>
void edf(const UniPoly<K>& f, int d, SplitMix64& rng,
         std::vector<UniPoly<K>>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const long p = ff_char(f.zero);
  const Int q = ff_size(f.zero);
  UniPoly<K> x = UniPoly<K>::monomial(f.zero, 1, ring_one(f.zero));
  for (;;) {
    auto r = random_poly_below(f, rng);
    if (r.degree() < 1) continue;
    UniPoly<K> w(f.zero);
    if (p == 2) {
      // trace map over F_2: sum of r^(2^i), i < k*d  (q^d = 2^(k*d))
      Int qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      long bits = static_cast<long>(mpz_sizeinbase(qd.get_mpz_t(), 2)) - 1;
      UniPoly<K> t = poly_mod(r, f), acc(f.zero);
      for (long i = 0; i < bits; ++i) {
        acc = acc + t;
        t = poly_mod(t * t, f);
      }
      w = acc;
    } else {
      Int qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      w = pow_mod(r, (qd - 1) / 2, f) - ring_one(f);
    }
    auto g = poly_gcd(w, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, rng, out);
      edf(divmod_field(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

template <class K>
struct FFFactorization {
  K lead;
  std::vector<std::pair<UniPoly<K>, unsigned>> factors;  // monic, canonical order

  UniPoly<K> reconstruct() const {
    auto r = UniPoly<K>::constant(lead);
    for (auto& [f, m] : factors)
      for (unsigned i = 0; i < m; ++i) r = r * f;
    return r;
  }
};

// Complete factorization over a finite field: squarefree decomposition,
// distinct-degree splitting, then randomized equal-degree splitting (seeded,
// deterministic given the seed).
template <class K>
FFFactorization<K> factor_ff(const UniPoly<K>& input, SplitMix64& rng) {
  if (input.is_zero_poly()) throw ZeroPolynomial();
  FFFactorization<K> out{input.lc(), {}};
  auto f = make_monic(input);
  if (f.degree() < 1) return out;
  const Int q = ff_size(f.zero);
  for (auto& [sf, mult] : sqf_decompose(f)) {
    // distinct-degree on the squarefree factor
    auto rem = sf;
    UniPoly<K> x = UniPoly<K>::monomial(f.zero, 1, ring_one(f.zero));
    auto h = poly_mod(x, rem);
    for (int d = 1; rem.degree() >= 2 * d; ++d) {
      h = pow_mod(h, q, rem);
      auto g = poly_gcd(h - x, rem);
      if (g.degree() > 0) {
        std::vector<UniPoly<K>> parts;
        detail::edf(g, d, rng, parts);
        for (auto& irr : parts) out.factors.emplace_back(irr, mult);
        rem = divmod_field(rem, g).first;
        h = poly_mod(h, rem);
      }
    }
    if (rem.degree() > 0) out.factors.emplace_back(rem, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](auto& a, auto& b) { return detail::poly_less(a.first, b.first); });
  return out;
}

// ---------------------------------------------------------------------------
// MultiPoly: sparse exact multivariate polynomial (fixed arity, lex-ordered
// exponent map).
// ---------------------------------------------------------------------------
template <class C>
struct MultiPoly {
  int nvars;
  std::map<std::vector<int>, C> t;  // exponent vector -> nonzero coefficient

  explicit MultiPoly(int nv) : nvars(nv) {}

  static MultiPoly monomial(int nv, std::vector<int> e, C coeff) {
    MultiPoly p(nv);
    if (!is_zero(coeff)) p.t.emplace(std::move(e), std::move(coeff));
    return p;
  }
  static MultiPoly constant(int nv, C coeff) {
    return monomial(nv, std::vector<int>(nv, 0), std::move(coeff));
  }

  bool is_zero_poly() const { return t.empty(); }
  void add_term(const std::vector<int>& e, const C& coeff) {
    if (is_zero(coeff)) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, coeff);
    } else {
      it->second = it->second + coeff;
      if (is_zero(it->second)) t.erase(it);
    }
  }

  int degree(int var) const {
    int d = 0;
    for (auto& [e, _] : t) d = std::max(d, e[var]);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (auto& [e, _] : t) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [e, c] : b.t) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [e, c] : b.t) {
      C n = ring_zero(c) - c;
      r.add_term(e, n);
    }
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars);
    std::vector<int> e(static_cast<size_t>(a.nvars));
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) {
        for (int i = 0; i < a.nvars; ++i) e[static_cast<size_t>(i)] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(nvars);
    for (auto& [e, c] : t) r.t.emplace(e, ring_zero(c) - c);
    return r;
  }
  bool operator==(const MultiPoly& o) const { return nvars == o.nvars && t == o.t; }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars);
    for (auto& [e, c] : t) {
      if (e[var] == 0) continue;
      auto e2 = e;
      e2[var] -= 1;
      C nc = c;
      for (int i = 1; i < e[var]; ++i) nc = nc + c;  // e[var] * c
      r.add_term(e2, nc);
    }
    return r;
  }

  // substitute var := value (exponent collapses to 0)
  MultiPoly eval_var(int var, const C& value) const {
    MultiPoly r(nvars);
    for (auto& [e, c] : t) {
      C nc = c;
      for (int i = 0; i < e[var]; ++i) nc = nc * value;
      auto e2 = e;
      e2[var] = 0;
      r.add_term(e2, nc);
    }
    return r;
  }

  // view as univariate in `var` with MultiPoly coefficients
  std::vector<MultiPoly> coeffs_in(int var) const {
    std::vector<MultiPoly> out(static_cast<size_t>(degree(var)) + 1,
                               MultiPoly(nvars));
    for (auto& [e, c] : t) {
      auto e2 = e;
      e2[var] = 0;
      out[static_cast<size_t>(e[var])].add_term(e2, c);
    }
    return out;
  }

  // the polynomial must involve only `var`; convert to dense univariate
  UniPoly<C> to_univar(int var, const C& zero_like) const {
    UniPoly<C> r(ring_zero(zero_like));
    r.c.assign(static_cast<size_t>(degree(var)) + 1, ring_zero(zero_like));
    for (auto& [e, c] : t) {
      for (int i = 0; i < nvars; ++i)
        if (i != var && e[i] != 0)
          throw std::logic_error("to_univar: extra variable present");
      r.c[static_cast<size_t>(e[var])] = c;
    }
    r.normalize();
    return r;
  }
};

template <class C>
bool is_zero(const MultiPoly<C>& p) {
  return p.is_zero_poly();
}
template <class C>
MultiPoly<C> ring_zero(const MultiPoly<C>& p) {
  return MultiPoly<C>(p.nvars);
}
template <class C>
MultiPoly<C> ring_one(const MultiPoly<C>& p) {
  if (p.t.empty()) throw std::logic_error("ring_one(MultiPoly): no context coeff");
  return MultiPoly<C>::constant(p.nvars, ring_one(p.t.begin()->second));
}

// sparse exact division (lex leading-term elimination); throws if not exact
template <class C>
MultiPoly<C> exact_div(const MultiPoly<C>& a, const MultiPoly<C>& b) {
  if (b.is_zero_poly()) throw DivisionByZero();
  MultiPoly<C> r = a, q(a.nvars);
  std::vector<int> e(static_cast<size_t>(a.nvars));
  const auto& [eb, cb] = *b.t.rbegin();
  while (!r.is_zero_poly()) {
    const auto& [er, cr] = *r.t.rbegin();
    for (int i = 0; i < a.nvars; ++i) {
      e[static_cast<size_t>(i)] = er[i] - eb[i];
      if (e[static_cast<size_t>(i)] < 0)
        throw std::logic_error("exact_div(multipoly): not divisible");
    }
    C cq = exact_div(cr, cb);
    auto mono = MultiPoly<C>::monomial(a.nvars, e, cq);
    q = q + mono;
    r = r - mono * b;
  }
  return q;
}

// Sylvester resultant with respect to one variable; result does not involve it.
template <class C>
MultiPoly<C> mp_resultant(const MultiPoly<C>& f, const MultiPoly<C>& g, int var) {
  if (f.is_zero_poly() || g.is_zero_poly()) throw ZeroPolynomial();
  auto fc = f.coeffs_in(var);
  auto gc = g.coeffs_in(var);
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  MultiPoly<C> one = MultiPoly<C>::constant(
      f.nvars, ring_one(f.t.begin()->second));
  auto mpow = [&](const MultiPoly<C>& b, int e) {
    MultiPoly<C> r = one;
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
  };
  if (m == 0 && n == 0) return one;
  if (m == 0) return mpow(fc[0], n);
  if (n == 0) return mpow(gc[0], m);
  std::vector<std::vector<MultiPoly<C>>> s(
      static_cast<size_t>(m + n),
      std::vector<MultiPoly<C>>(static_cast<size_t>(m + n), MultiPoly<C>(f.nvars)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = fc[static_cast<size_t>(i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = gc[static_cast<size_t>(i)];
  return bareiss_det(std::move(s));
}

// ---------------------------------------------------------------------------
// Singular-locus elimination for a family h(x, y, u): the parameter values u
// where h = dh/dx = dh/dy = 0 has a solution. Two independent iterated-
// resultant routes are combined by a gcd to cancel each route's extraneous
// factors (each route's junk is coprime to the other's):
//   route A:  Res_y( Res_x(h, h_x),  Res_x(h, h_y) )
//   route B:  Res_y( Res_x(h_x, h_z), Res_x(h_y, h_z) ),  h_z := 3h - x h_x - y h_y
// (h_z is the Euler-relation completion of the partials: for the
// dehomogenization of a ternary cubic it equals the third partial.)
// The result is squarefree, primitive over Z, positive leading coefficient.
// ---------------------------------------------------------------------------
inline UniPoly<Int> eliminate_singular_locus(const MultiPoly<Int>& h, int xv = 0,
                                             int yv = 1, int uv = 2) {
  auto hx = h.derivative(xv);
  auto hy = h.derivative(yv);
  auto x1 = MultiPoly<Int>::monomial(h.nvars, [&] {
    std::vector<int> e(static_cast<size_t>(h.nvars), 0);
    e[static_cast<size_t>(xv)] = 1;
    return e;
  }(), Int(1));
  auto y1 = MultiPoly<Int>::monomial(h.nvars, [&] {
    std::vector<int> e(static_cast<size_t>(h.nvars), 0);
    e[static_cast<size_t>(yv)] = 1;
    return e;
  }(), Int(1));
  auto three = MultiPoly<Int>::constant(h.nvars, Int(3));
  auto hz = three * h - x1 * hx - y1 * hy;
  if (hx.is_zero_poly() || hy.is_zero_poly()) throw EliminationDegenerate();

  auto squarefree_primitive = [&](const MultiPoly<Int>& r) {
    auto uni = r.to_univar(uv, Int(0));
    if (uni.is_zero_poly()) throw EliminationDegenerate();
    if (uni.degree() < 1) return ring_one(uni);  // no singular parameters
    return primitive_integer(squarefree_part(to_rational(uni)));
  };

  auto route = [&](const MultiPoly<Int>& f1, const MultiPoly<Int>& f2,
                   const MultiPoly<Int>& g1, const MultiPoly<Int>& g2) {
    auto r1 = mp_resultant(f1, f2, xv);
    auto r2 = mp_resultant(g1, g2, xv);
    if (r1.is_zero_poly() || r2.is_zero_poly()) throw EliminationDegenerate();
    return squarefree_primitive(mp_resultant(r1, r2, yv));
  };

  auto a = route(h, hx, h, hy);
  auto b = route(hx, hz, hy, hz);
  auto g = gcd_primitive(a, b);
  if (g.is_zero_poly()) throw EliminationDegenerate();
  return g;
}

// --- printing --------------------------------------------------------------

inline std::string coeff_str(const Int& x) { return x.get_str(); }
inline std::string coeff_str(const Rational& x) { return rat_str(x); }

template <class K>
std::string UniPoly<K>::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::string s;
  for (size_t i = c.size(); i-- > 0;) {
    if (is_zero(c[i])) continue;
    if (!s.empty()) s += " + ";
    s += coeff_str(c[i]);
    if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

}  // namespace ctk
