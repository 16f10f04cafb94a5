// Exact integer/rational arithmetic on top of GMP, p-adic valuations of
// rationals, and factorization of integers over a fixed prime basis.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctk {

using Int = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

struct NotPrime : std::runtime_error {
  explicit NotPrime(long n)
      : std::runtime_error("not a prime: " + std::to_string(n)), n(n) {}
  long n;
};

struct NonSmoothRemainder : std::runtime_error {
  explicit NonSmoothRemainder(Int r)
      : std::runtime_error("residual factor outside prime basis: " + r.get_str()),
        remainder(std::move(r)) {}
  Int remainder;
};

// Deterministic primality by trial division; sufficient for the word-sized
// primes used everywhere in this toolkit.
bool is_prime_long(long n);

// --- valuations ---------------------------------------------------------

// v_p of a value, with +infinity represented explicitly (v of 0).
struct PVal {
  bool infinite = false;
  long v = 0;

  static PVal inf() { return {true, 0}; }
  static PVal fin(long v) { return {false, v}; }
  bool operator==(const PVal&) const = default;
  // infinity compares greater than every finite valuation
  bool operator<(const PVal& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return v < o.v;
  }
  std::string to_string() const { return infinite ? "+inf" : std::to_string(v); }
};

long p_valuation_nonzero(const Int& n, long p);  // pre: n != 0, p prime
PVal p_valuation(const Int& n, long p);
PVal p_valuation(const Rational& q, long p);

// --- factorization over a basis -----------------------------------------

struct FactoredInteger {
  int sign = 1;  // +1 or -1
  std::vector<std::pair<long, unsigned long>> factors;  // (prime, exponent>=1), primes increasing

  Int reconstruct() const;
  std::string to_string() const;
  bool operator==(const FactoredInteger&) const = default;
};

// Full factorization of n over the given primes; throws NonSmoothRemainder
// if a cofactor |r| > 1 survives. Basis primes are validated.
FactoredInteger factor_over_basis(const Int& n, std::vector<long> basis);

// --- rational helpers -----------------------------------------------------

inline Rational rat_div(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw DivisionByZero();
  return a / b;
}

// "n" or "n/d" (canonicalized); digits with optional leading '-'
std::optional<Rational> parse_rational(std::string_view s);

inline std::string rat_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

// --- generic ring hooks (found by unqualified lookup / ADL) ---------------

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(long x) { return x == 0; }

inline Int ring_zero(const Int&) { return Int(0); }
inline Int ring_one(const Int&) { return Int(1); }
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline long ring_zero(long) { return 0; }
inline long ring_one(long) { return 1; }

inline Int exact_div(const Int& a, const Int& b) {
  if (sgn(b) == 0) throw DivisionByZero();
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("exact_div: not divisible");
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) { return rat_div(a, b); }
inline Rational field_inv(const Rational& a) {
  if (sgn(a) == 0) throw DivisionByZero();
  return Rational(1) / a;
}

// --- stable digest ---------------------------------------------------------

// FNV-1a 64; used for data-table checksums and report digests.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : s) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

// splitmix64: tiny deterministic PRNG used for property tests and
// equal-degree splitting (implementation-independent, unlike <random>
// distributions).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n) without implementation-defined behavior
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace ctk
