#pragma once

#include <cstdint>
#include <map>

#include "cubictk/jacinv.hpp"
#include "cubictk/padic.hpp"

namespace ctk {

const char* toolkit_version();

struct UnknownClaimId : std::runtime_error {
  explicit UnknownClaimId(const std::string& id)
      : std::runtime_error("unknown claim id: " + id) {}
};

// Every number the verifier checks the computed geometry against, in one
// injectable bundle. The test suite corrupts single entries to confirm the
// corresponding claim flips to Failed.
struct Constants {
  // fiber family:  c5 x^3 + c9 y^3 + c10 z^3 + c12 u^3 (x+y+z)^3
  long c5 = 5, c9 = 9, c10 = 10, c12 = 12;
  UniPoly<Int> u_num{Int(0)};  // t^12 - t^4 - 1
  UniPoly<Int> u_den{Int(0)};  // t^12 - t^8 - 1

  Int small_disc;                    // 242325
  FactoredInteger small_disc_factors;  // 3^3 * 5^2 * 359

  UniPoly<Int> singular12{Int(0)};   // 2062096 u^12 + ... + 50625
  FactoredInteger disc12_factors;    // 2^146 * 3^92 * 5^50 * 359^4

  Int jacobian_a_scalar;             // 145800
  UniPoly<Int> jacobian_b{Int(0)};   // degree-72 B(t), from the data table

  std::vector<long> small_bad_primes{2, 3, 5};
  long line_prime = 359;

  static Constants standard();
};

struct FamilyConfig {
  long p_min = 7;
  long p_max = 100;
  std::vector<Rational> t_samples;
  int precision = 8;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int jobs = 1;

  static FamilyConfig standard();
  // sweep primes: p_min..p_max minus {2, 3, 5, 359}
  std::vector<long> sweep_primes() const;
};

enum class Verdict { Verified, Failed, Unknown, AssumedExternal };
const char* verdict_name(Verdict v);

struct ClaimRecord {
  std::string id;
  std::string description;
  std::string anchor;  // the mathematical statement being verified
  std::vector<std::string> deps;
};
const std::vector<ClaimRecord>& claim_registry();
const ClaimRecord& claim_record(const std::string& id);

struct ClaimResult {
  std::string id;
  Verdict verdict = Verdict::Unknown;
  std::string evidence;  // serialized JSON object, deterministic field order
  long millis = 0;
};

struct CertificateReport {
  std::string version;
  FamilyConfig config;
  std::vector<ClaimResult> claims;  // ascending claim number

  bool any_failed() const;
  std::string digest() const;   // stable across runs: timing excluded
  std::string to_json() const;  // full certificate document
};

// multinomial coefficients of (x+y+z)^3 in the kCubicMonomials order
inline constexpr std::array<long, 10> kCubeMultinomial{1, 3, 3, 3, 6,
                                                       3, 1, 3, 3, 1};

// the fiber cubic for a fixed u, over any commutative ring
template <class K>
PlaneCubic<K> build_fiber_in(const K& u, const Constants& kc) {
  const K u3 = u * u * u;
  std::array<K, 10> a{u3, u3, u3, u3, u3, u3, u3, u3, u3, u3};
  for (size_t i = 0; i < 10; ++i)
    a[i] = small_int_in(kc.c12 * kCubeMultinomial[i], u) * u3;
  a[0] = a[0] + small_int_in(kc.c5, u);
  a[6] = a[6] + small_int_in(kc.c9, u);
  a[9] = a[9] + small_int_in(kc.c10, u);
  return PlaneCubic<K>(std::move(a));
}

PlaneCubic<Rational> build_fiber(const Rational& u);

// the pencil's second chart at m = 1/u: 5x^3 + 9y^3 + 10(m s - x - y)^3 +
// 12 s^3 with s = u(x+y+z); p-integral when v_p(u) < 0, and at m = 0 it is
// the fiber over u = infinity
PlaneCubic<Rational> build_second_chart_fiber(const Rational& m,
                                              const Constants& kc);

// u(t) with the projective convention at t = infinity (nullopt input)
struct UValue {
  bool infinite = false;
  Rational v;
};
UValue u_of_t(const std::optional<Rational>& t, const Constants& kc);
UValue u_of_t(const std::optional<Rational>& t);

struct CheckOutcome {
  bool ok = false;
  std::string evidence;  // serialized JSON
};
CheckOutcome verify_structural_u_map(const Constants& kc);
CheckOutcome verify_residue_conditions(const Rational& t, const Constants& kc);

ClaimResult verify_claim(const std::string& id, const FamilyConfig& cfg,
                         const Constants& kc);
CertificateReport verify_all(const FamilyConfig& cfg, const Constants& kc);

inline ClaimResult verify_claim(const std::string& id,
                                const FamilyConfig& cfg) {
  return verify_claim(id, cfg, Constants::standard());
}
inline CertificateReport verify_all(const FamilyConfig& cfg) {
  return verify_all(cfg, Constants::standard());
}

}  // namespace ctk
