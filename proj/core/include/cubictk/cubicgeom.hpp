// Geometry of plane cubics over exact fields: singular loci with tangent-cone
// ranks, smooth-point search, complete-splitting detection (with independent
// oracle), degeneration classification with Euler characteristics, point
// counting, and local solvability over Q_p via Hensel lifting.
#pragma once

#include <array>
#include <optional>

#include "cubictk/galoisfield.hpp"
#include "cubictk/padic.hpp"
#include "cubictk/tables.hpp"

namespace ctk {

struct CharacteristicThree : std::runtime_error {
  CharacteristicThree()
      : std::runtime_error(
            "split test undefined in characteristic 3; use the oracle") {}
};
struct SearchSpaceTooLarge : std::runtime_error {
  SearchSpaceTooLarge()
      : std::runtime_error("exhaustive split search infeasible for this field") {}
};
struct UnsupportedField : std::runtime_error {
  explicit UnsupportedField(const std::string& what) : std::runtime_error(what) {}
};

// --- projective points -------------------------------------------------------

template <class K>
struct ProjPoint {
  std::array<K, 3> c;  // canonical: first nonzero coordinate is 1

  ProjPoint(K x, K y, K z) : c{std::move(x), std::move(y), std::move(z)} {
    size_t lead = 0;
    while (lead < 3 && is_zero(c[lead])) ++lead;
    if (lead == 3) throw std::invalid_argument("ProjPoint: all coordinates zero");
    K inv = field_inv(c[lead]);
    for (auto& v : c) v = v * inv;
  }
  bool operator==(const ProjPoint& o) const { return c == o.c; }
  std::string to_string() const;
};

// --- plane cubics --------------------------------------------------------------

// Coefficients in the fixed monomial order
//   x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3.
inline constexpr std::array<std::array<int, 3>, 10> kCubicMonomials{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

template <class K>
struct PlaneCubic {
  std::array<K, 10> a;

  explicit PlaneCubic(std::array<K, 10> coeffs) : a(std::move(coeffs)) {
    bool allzero = true;
    for (const auto& x : a) allzero = allzero && is_zero(x);
    if (allzero) throw std::invalid_argument("PlaneCubic: identically zero");
  }

  K eval(const K& x, const K& y, const K& z) const {
    const K x2 = x * x, y2 = y * y, z2 = z * z;
    return a[0] * (x2 * x) + a[1] * (x2 * y) + a[2] * (x2 * z) +
           a[3] * (x * y2) + a[4] * (x * y * z) + a[5] * (x * z2) +
           a[6] * (y2 * y) + a[7] * (y2 * z) + a[8] * (y * z2) + a[9] * (z2 * z);
  }

  // quadric coefficient tuples (x^2, xy, xz, y^2, yz, z^2) of the partials
  std::array<K, 6> grad_x() const {
    return {a[0] + a[0] + a[0], a[1] + a[1], a[2] + a[2], a[3], a[4], a[5]};
  }
  std::array<K, 6> grad_y() const {
    return {a[1], a[3] + a[3], a[4], a[6] + a[6] + a[6], a[7] + a[7], a[8]};
  }
  std::array<K, 6> grad_z() const {
    return {a[2], a[4], a[5] + a[5], a[7], a[8] + a[8], a[9] + a[9] + a[9]};
  }

  bool operator==(const PlaneCubic& o) const { return a == o.a; }
};

template <class K>
K eval_quadric(const std::array<K, 6>& q, const K& x, const K& y, const K& z) {
  return q[0] * (x * x) + q[1] * (x * y) + q[2] * (x * z) + q[3] * (y * y) +
         q[4] * (y * z) + q[5] * (z * z);
}

template <class K, class L, class F>
PlaneCubic<L> map_cubic(const PlaneCubic<K>& C, F&& f) {
  std::array<L, 10> out{f(C.a[0]), f(C.a[1]), f(C.a[2]), f(C.a[3]), f(C.a[4]),
                        f(C.a[5]), f(C.a[6]), f(C.a[7]), f(C.a[8]), f(C.a[9])};
  return PlaneCubic<L>(std::move(out));
}

template <class K>
MultiPoly<K> to_multipoly(const PlaneCubic<K>& C) {
  MultiPoly<K> f(3);
  for (size_t i = 0; i < 10; ++i) {
    const auto& m = kCubicMonomials[i];
    f.add_term({m[0], m[1], m[2]}, C.a[i]);
  }
  return f;
}

template <class K>
std::array<K, 10> cubic_coeffs_from_multipoly(const MultiPoly<K>& f,
                                              const K& zero_like) {
  std::array<K, 10> out{ring_zero(zero_like), ring_zero(zero_like),
                        ring_zero(zero_like), ring_zero(zero_like),
                        ring_zero(zero_like), ring_zero(zero_like),
                        ring_zero(zero_like), ring_zero(zero_like),
                        ring_zero(zero_like), ring_zero(zero_like)};
  for (const auto& [e, c] : f.t) {
    bool matched = false;
    for (size_t i = 0; i < 10; ++i) {
      const auto& m = kCubicMonomials[i];
      if (e[0] == m[0] && e[1] == m[1] && e[2] == m[2]) {
        out[i] = c;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw std::logic_error("cubic_coeffs_from_multipoly: not a cubic form");
  }
  return out;
}

// substitute (x, y, z) := M (x, y, z)^T for an invertible matrix M
template <class K>
PlaneCubic<K> compose_linear(const PlaneCubic<K>& C,
                             const std::array<std::array<K, 3>, 3>& m) {
  const K zero = ring_zero(C.a[0]);
  std::array<MultiPoly<K>, 3> subs{MultiPoly<K>(3), MultiPoly<K>(3),
                                   MultiPoly<K>(3)};
  for (int r = 0; r < 3; ++r)
    for (int v = 0; v < 3; ++v) {
      std::vector<int> e(3, 0);
      e[static_cast<size_t>(v)] = 1;
      subs[static_cast<size_t>(r)].add_term(e, m[static_cast<size_t>(r)]
                                                 [static_cast<size_t>(v)]);
    }
  MultiPoly<K> acc(3);
  for (size_t i = 0; i < 10; ++i) {
    if (is_zero(C.a[i])) continue;
    const auto& mm = kCubicMonomials[i];
    MultiPoly<K> term = MultiPoly<K>::constant(3, C.a[i]);
    for (int j = 0; j < mm[0]; ++j) term = term * subs[0];
    for (int j = 0; j < mm[1]; ++j) term = term * subs[1];
    for (int j = 0; j < mm[2]; ++j) term = term * subs[2];
    acc = acc + term;
  }
  return PlaneCubic<K>(cubic_coeffs_from_multipoly(acc, zero));
}

// --- Hessian and the splitting test --------------------------------------------

// the 10 coefficients of the Hessian determinant cubic (may be all zero)
template <class K>
std::array<K, 10> hessian_coeffs(const PlaneCubic<K>& C) {
  auto f = to_multipoly(C);
  std::array<std::array<MultiPoly<K>, 3>, 3> h{{
      {MultiPoly<K>(3), MultiPoly<K>(3), MultiPoly<K>(3)},
      {MultiPoly<K>(3), MultiPoly<K>(3), MultiPoly<K>(3)},
      {MultiPoly<K>(3), MultiPoly<K>(3), MultiPoly<K>(3)},
  }};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        f.derivative(i).derivative(j);
  auto det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
             h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
             h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  return cubic_coeffs_from_multipoly(det, ring_zero(C.a[0]));
}

// Complete-splitting test by Hessian proportionality, valid away from
// characteristics 2 and 3: C factors into three lines over the closure
// iff Hess(C) is a scalar multiple of C (zero multiple included).
template <class K>
bool splits_into_lines_generic(const PlaneCubic<K>& C) {
  const long p = ff_char(C.a[0]);
  if (p == 3) throw CharacteristicThree();
  if (p == 2)
    throw UnsupportedField("Hessian split test unavailable in characteristic 2");
  auto hs = hessian_coeffs(C);
  size_t pivot = 0;
  while (is_zero(C.a[pivot])) ++pivot;  // C is not identically zero
  for (size_t j = 0; j < 10; ++j)
    if (!(hs[j] * C.a[pivot] == hs[pivot] * C.a[j])) return false;
  return true;
}

// Fp dispatcher: characteristic 2 uses the precomputed equivariant covariant
// (the classical Hessian vanishes identically there), characteristic 3 is
// refused (route to the oracle), everything else is the Hessian test.
bool splits_into_lines(const PlaneCubic<Fp>& C);

// Independent exhaustive oracle: for p <= 5 membership in the precomputed set
// of all line-triple products (rational triples, conjugate pairs over F_{p^2}
// times a rational line, and F_{p^3} Galois orbits); for p > 5 only cubics
// with a rational linear factor are decidable (conic rank test).
bool splits_into_lines_oracle(const PlaneCubic<Fp>& C);

// caller-facing routing: characteristic 3 goes to the oracle
bool splits_into_lines_routed(const PlaneCubic<Fp>& C);

// --- enumeration over P^2(F_p) ---------------------------------------------------

// Deterministic order: (x : y : 1) with x outer and y inner, then (x : 1 : 0),
// then (1 : 0 : 0). fn receives raw chart coordinates; return true to stop.
template <class Fn>
bool scan_proj_plane(long p, Fn&& fn) {
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if (fn(x, y, 1L)) return true;
  for (long x = 0; x < p; ++x)
    if (fn(x, 1L, 0L)) return true;
  return fn(1L, 0L, 0L);
}

long count_points(const PlaneCubic<Fp>& C);
std::optional<ProjPoint<Fp>> find_smooth_Fp_point(const PlaneCubic<Fp>& C);

// lines l0 x + l1 y + l2 z dividing C, in scan order, with multiplicity
std::vector<std::pair<std::array<long, 3>, int>> rational_line_factors(
    const PlaneCubic<Fp>& C);

// --- singular points --------------------------------------------------------------

// Tangent-cone rank of C at a point of C with vanishing gradient: the rank of
// the quadratic part of C recentred at the point (2 = node, 1 = cusp,
// 0 = cone over >= 3 directions).
template <class K>
int tangent_cone_rank(const PlaneCubic<K>& C, const ProjPoint<K>& P) {
  const K zero = ring_zero(C.a[0]);
  size_t chart = 0;
  while (is_zero(P.c[chart])) ++chart;  // canonical rep: this coordinate is 1
  const size_t u = chart == 0 ? 1 : 0;
  const size_t v = chart == 2 ? 1 : 2;
  auto binom = [](int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  auto kpow = [&](const K& b, int e) {
    K r = ring_one(C.a[0]);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
  };
  auto kscale = [&](int n, const K& x) {
    K r = zero;
    for (int i = 0; i < n; ++i) r = r + x;
    return r;
  };
  K qa = zero, qb = zero, qc = zero;  // U^2, UV, V^2
  for (size_t i = 0; i < 10; ++i) {
    if (is_zero(C.a[i])) continue;
    const auto& m = kCubicMonomials[i];
    const int eu = m[u], ev = m[v];
    auto contrib = [&](int alpha, int beta, K& target) {
      const int bu = binom(eu, alpha), bv = binom(ev, beta);
      if (bu == 0 || bv == 0) return;
      K val = C.a[i] * kpow(P.c[u], eu - alpha) * kpow(P.c[v], ev - beta);
      target = target + kscale(bu * bv, val);
    };
    contrib(2, 0, qa);
    contrib(1, 1, qb);
    contrib(0, 2, qc);
  }
  if (is_zero(qa) && is_zero(qb) && is_zero(qc)) return 0;
  if (ff_char(C.a[0]) == 2) return is_zero(qb) ? 1 : 2;
  K disc = qb * qb - kscale(4, qa * qc);
  return is_zero(disc) ? 1 : 2;
}

namespace geom_detail {

// the three partial-derivative quadrics restricted to the chart z = 1,
// as polynomials in y with UniPoly-in-x coefficients
template <class K>
UniPoly<UniPoly<K>> quadric_chart_z1(const std::array<K, 6>& q, const K& zero) {
  UniPoly<K> zx(zero);
  UniPoly<UniPoly<K>> out(zx);
  // y^2 coefficient: q3
  // y^1 coefficient: q1 x + q4
  // y^0 coefficient: q0 x^2 + q2 x + q5
  UniPoly<K> c0(zero, {q[5], q[2], q[0]});
  UniPoly<K> c1(zero, {q[4], q[1]});
  UniPoly<K> c2(zero, {q[3]});
  out.c = {c0, c1, c2};
  out.normalize();
  return out;
}

template <class K>
UniPoly<K> quadric_line_z0(const std::array<K, 6>& q, const K& zero) {
  // restrict to (x : 1 : 0): q0 x^2 + q1 x + q3
  return UniPoly<K>(zero, {q[3], q[1], q[0]});
}

template <class K>
bool gradient_vanishes(const PlaneCubic<K>& C, const K& x, const K& y,
                       const K& z) {
  return is_zero(eval_quadric(C.grad_x(), x, y, z)) &&
         is_zero(eval_quadric(C.grad_y(), x, y, z)) &&
         is_zero(eval_quadric(C.grad_z(), x, y, z));
}

}  // namespace geom_detail

// All singular points of C with coordinates in the coefficient field K,
// paired with tangent-cone ranks, sorted canonically. Small fields are
// scanned exhaustively; larger fields (characteristic not 3) use chartwise
// elimination: candidate x-coordinates from resultants of the partials, then
// exact verification of every candidate.
template <class K>
std::vector<std::pair<ProjPoint<K>, int>> singular_points(
    const PlaneCubic<K>& C, SplitMix64& rng) {
  const K zero = ring_zero(C.a[0]);
  const K one = ring_one(C.a[0]);
  std::vector<std::pair<ProjPoint<K>, int>> out;
  auto push_if_singular = [&](const K& x, const K& y, const K& z) {
    if (!is_zero(C.eval(x, y, z))) return;
    if (!geom_detail::gradient_vanishes(C, x, y, z)) return;
    ProjPoint<K> P(x, y, z);
    out.emplace_back(P, tangent_cone_rank(C, P));
  };

  const Int q = ff_size(C.a[0]);
  if (q <= 1200) {  // exhaustive scan, elements in canonical key order
    std::vector<K> elems = enumerate_field_elements(C.a[0]);
    for (const K& x : elems)
      for (const K& y : elems) push_if_singular(x, y, one);
    for (const K& x : elems) push_if_singular(x, one, zero);
    push_if_singular(one, zero, zero);
    return out;
  }

  if (ff_char(C.a[0]) == 3)
    throw UnsupportedField("characteristic-3 elimination not supported");

  // chart z = 1: eliminate y between pairs of partial quadrics
  std::array<UniPoly<UniPoly<K>>, 3> pq{
      geom_detail::quadric_chart_z1(C.grad_x(), zero),
      geom_detail::quadric_chart_z1(C.grad_y(), zero),
      geom_detail::quadric_chart_z1(C.grad_z(), zero)};
  std::vector<const UniPoly<UniPoly<K>>*> nz;
  for (auto& pp : pq)
    if (!pp.is_zero_poly()) nz.push_back(&pp);
  if (nz.size() < 2)
    throw std::logic_error("singular_points: singular locus not isolated");
  UniPoly<K> g(zero);
  bool have = false;
  for (size_t i = 0; i < nz.size() && (!have || g.degree() > 0); ++i)
    for (size_t j = i + 1; j < nz.size(); ++j) {
      auto r = resultant(*nz[i], *nz[j]);
      if (r.is_zero_poly()) continue;
      g = have ? poly_gcd(g, r) : make_monic(r);
      have = true;
    }
  if (!have)
    throw std::logic_error("singular_points: all resultants vanish");
  for (auto& [x0, mult] : field_roots(g, rng)) {
    // substitute x = x0 into the three partials, solve for y
    UniPoly<K> gy(zero);
    bool havey = false, allzero = true;
    for (auto& pp : pq) {
      UniPoly<K> sub(zero);
      for (size_t d = 0; d < pp.c.size(); ++d) {
        K val = pp.c[d].eval(x0);
        if (sub.c.size() <= d) sub.c.resize(d + 1, zero);
        sub.c[d] = val;
      }
      sub.normalize();
      if (sub.is_zero_poly()) continue;
      allzero = false;
      if (sub.degree() == 0) {  // nonvanishing constant: no common y root here
        gy = UniPoly<K>::constant(one);
        havey = true;
        break;
      }
      gy = havey ? poly_gcd(gy, sub) : make_monic(sub);
      havey = true;
    }
    if (allzero)
      throw std::logic_error("singular_points: non-isolated fiber at x0");
    if (!havey || gy.degree() < 1) continue;
    for (auto& [y0, m2] : field_roots(gy, rng)) push_if_singular(x0, y0, one);
  }
  // line z = 0, chart y = 1
  std::array<UniPoly<K>, 3> lq{
      geom_detail::quadric_line_z0(C.grad_x(), zero),
      geom_detail::quadric_line_z0(C.grad_y(), zero),
      geom_detail::quadric_line_z0(C.grad_z(), zero)};
  UniPoly<K> gl(zero);
  bool havel = false, alll = true;
  for (auto& s : lq) {
    if (s.is_zero_poly()) continue;
    alll = false;
    if (s.degree() == 0) {
      gl = UniPoly<K>::constant(one);
      havel = true;
      break;
    }
    gl = havel ? poly_gcd(gl, s) : make_monic(s);
    havel = true;
  }
  if (alll) throw std::logic_error("singular_points: line at infinity singular");
  if (havel && gl.degree() >= 1)
    for (auto& [x0, m] : field_roots(gl, rng)) push_if_singular(x0, one, zero);
  // the point (1 : 0 : 0)
  push_if_singular(one, zero, zero);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    for (int i = 0; i < 3; ++i) {
      Int ka = ff_key(a.first.c[static_cast<size_t>(i)]);
      Int kb = ff_key(b.first.c[static_cast<size_t>(i)]);
      if (ka != kb) return ka < kb;
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.first == b.first;
                        }),
            out.end());
  return out;
}

// enumerate all elements of the field of the given context element,
// in canonical key order
std::vector<Fp> enumerate_field_elements(Fp context);
std::vector<FqElem> enumerate_field_elements(const FqElem& context);

// spec-facing form: search W in P^2(F_{p^k}) for a cubic defined over F_p
std::vector<std::pair<ProjPoint<FqElem>, int>> singular_points_in_extension(
    const PlaneCubic<Fp>& C, const ExtField& K, SplitMix64& rng);

// --- degeneration classification -----------------------------------------------

enum class DegKind {
  Smooth,
  Nodal,
  Cuspidal,
  ConicSecant,
  ConicTangent,
  Triangle,
  ConcurrentLines,
  LineDoubleLine,
  TripleLine,
};

std::string kind_name(DegKind k);

struct Component {
  int degree;
  int genus;
  int preimages;  // points of the normalization over singular points of C
};

// chi = sum_i (2 - 2 g_i) + s - m, with m the total preimage count
int euler_char_from_normalization(const std::vector<Component>& comps,
                                  int singular_count);

struct DegenerationType {
  DegKind kind;
  int euler_characteristic;
  std::vector<Component> components;
  int singular_count;
};

// Full classification over F_p for 5 <= p <= 50 (the search bounds for
// absolute factorization); UnsupportedField otherwise.
DegenerationType classify_degeneration(const PlaneCubic<Fp>& C);

// --- local solvability -----------------------------------------------------------

// integral model: clear denominators, divide by content, first nonzero
// coefficient positive
PlaneCubic<Int> primitive_integral_model(const PlaneCubic<Rational>& C);
PlaneCubic<Fp> reduce_cubic(const PlaneCubic<Int>& C, long p);

struct SolvabilityCertificate {
  enum class Verdict { Solvable, Unknown } verdict;
  long p = 0;
  int N = 0;
  std::string strategy;  // "smooth-point" | "rational-line" | "window-mod-p2"
  int free_coord = -1;   // lifted coordinate index (0, 1, 2)
  std::array<Int, 3> point{Int(0), Int(0), Int(0)};  // coordinates mod p^N
  std::optional<std::array<long, 3>> line;  // rational line used, if any
  std::optional<LiftCertificate> lift;
  std::string note;

  std::string to_string() const;
};

// Cascade: (1) exhaustive smooth-point search on the reduction (tagged
// "rational-line" when the witness lies on a rational line component of a
// degenerate reduction), then (2) chartwise slope-condition search over
// residues mod p^2, Newton-lifting the free coordinate. Unknown is a value.
SolvabilityCertificate local_solvability(const PlaneCubic<Rational>& C, long p,
                                         int N);
bool replay_solvability(const PlaneCubic<Rational>& C,
                        const SolvabilityCertificate& cert);

struct RealSolvability {
  bool solvable;
  std::string justification;
};
// plane curves of odd degree always have real points
RealSolvability real_solvability(const PlaneCubic<Rational>& C);

// --- printing ---------------------------------------------------------------------

inline std::string coord_str(const Fp& v) { return std::to_string(v.v); }
inline std::string coord_str(const FqElem& v) { return fq_str(v); }
inline std::string coord_str(const Int& v) { return v.get_str(); }
inline std::string coord_str(const Rational& v) { return rat_str(v); }

template <class K>
std::string ProjPoint<K>::to_string() const {
  return "(" + coord_str(c[0]) + " : " + coord_str(c[1]) + " : " +
         coord_str(c[2]) + ")";
}

}  // namespace ctk
