#include "cubictk/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace ctk {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d : {2L, 3L, 5L, 7L}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (long d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long p_valuation_nonzero(const Int& n, long p) {
  Int rest;
  Int pz(p);
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

PVal p_valuation(const Int& n, long p) {
  if (!is_prime_long(p)) throw NotPrime(p);
  if (sgn(n) == 0) return PVal::inf();
  return PVal::fin(p_valuation_nonzero(n, p));
}

PVal p_valuation(const Rational& q, long p) {
  if (!is_prime_long(p)) throw NotPrime(p);
  if (sgn(q) == 0) return PVal::inf();
  return PVal::fin(p_valuation_nonzero(q.get_num(), p) -
                   p_valuation_nonzero(q.get_den(), p));
}

Int FactoredInteger::reconstruct() const {
  Int v(sign);
  for (auto& [p, e] : factors) {
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e);
    v *= pe;
  }
  return v;
}

std::string FactoredInteger::to_string() const {
  std::string s = sign < 0 ? "-1" : "+1";
  for (auto& [p, e] : factors) {
    s += " * " + std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

FactoredInteger factor_over_basis(const Int& n, std::vector<long> basis) {
  if (sgn(n) == 0) throw std::invalid_argument("factor_over_basis: n = 0");
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  for (long p : basis)
    if (!is_prime_long(p)) throw NotPrime(p);

  FactoredInteger out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Int rest = abs(n);
  for (long p : basis) {
    Int reduced;
    Int pz(p);
    auto e = mpz_remove(reduced.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
    if (e > 0) out.factors.emplace_back(p, static_cast<unsigned long>(e));
    rest = reduced;
  }
  if (rest != 1) throw NonSmoothRemainder(rest);
  return out;
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto digits = [](std::string_view v) {
    if (!v.empty() && v.front() == '-') v.remove_prefix(1);
    if (v.empty()) return false;
    return std::all_of(v.begin(), v.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  Rational q(std::string(num) + "/" + std::string(den));
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace ctk
