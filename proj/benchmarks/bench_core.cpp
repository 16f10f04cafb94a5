// Microbenchmarks for the hot paths of the verifier: elimination,
// big-integer discriminants, finite-field factorization and root finding,
// Hensel lifting, split testing, and invariant evaluation.
#include <benchmark/benchmark.h>

#include "cubictk/family.hpp"

using namespace ctk;

namespace {

MultiPoly<Int> family_dehomogenized() {
  // c5 x^3 + c9 y^3 + c10 + c12 u^3 (x + y + 1)^3 in variables (x, y, u)
  MultiPoly<Int> h(3);
  h.add_term({3, 0, 0}, Int(5));
  h.add_term({0, 3, 0}, Int(9));
  h.add_term({0, 0, 0}, Int(10));
  const long multi[3][3] = {{1, 3, 3}, {3, 6, 3}, {3, 3, 1}};
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j)
      h.add_term({i, j, 3}, Int(12 * multi[i][j]));
  h.add_term({2, 1, 3}, Int(12 * 3));
  h.add_term({1, 2, 3}, Int(12 * 3));
  h.add_term({3, 0, 3}, Int(12));
  h.add_term({0, 3, 3}, Int(12));
  return h;
}

void bm_eliminate_singular_locus(benchmark::State& state) {
  auto h = family_dehomogenized();
  for (auto _ : state) {
    auto e = eliminate_singular_locus(h);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(bm_eliminate_singular_locus)->Unit(benchmark::kMillisecond);

void bm_discriminant_degree12(benchmark::State& state) {
  const auto& f = Constants::standard().singular12;
  for (auto _ : state) {
    auto d = discriminant(f);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_discriminant_degree12)->Unit(benchmark::kMicrosecond);

void bm_factor_eliminant_mod7(benchmark::State& state) {
  auto f = reduce_mod_p(Constants::standard().singular12, 7);
  for (auto _ : state) {
    SplitMix64 rng(0xbe4c4u);
    auto ff = factor_ff(f, rng);
    benchmark::DoNotOptimize(ff);
  }
}
BENCHMARK(bm_factor_eliminant_mod7)->Unit(benchmark::kMicrosecond);

void bm_roots_in_f7_12(benchmark::State& state) {
  auto f = reduce_mod_p(Constants::standard().singular12, 7);
  auto F = build_extension(7, 12);
  for (auto _ : state) {
    SplitMix64 rng(0xbe4c4u);
    auto roots = roots_in_field(f, F, rng);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(bm_roots_in_f7_12)->Unit(benchmark::kMillisecond);

void bm_hensel_lift(benchmark::State& state) {
  // the t = 1 fiber restricted to the (x : 2 : 1) window chart
  UniPoly<Int> f(Int(0), {Int(406), Int(324), Int(108), Int(17)});
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cert = hensel_lift(f, 3, Int(7), N);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(bm_hensel_lift)->Arg(8)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void bm_split_test_f359(benchmark::State& state) {
  auto C = reduce_cubic(primitive_integral_model(build_fiber(Rational(1))), 359);
  for (auto _ : state) {
    bool s = splits_into_lines(C);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_split_test_f359)->Unit(benchmark::kMicrosecond);

void bm_find_smooth_point_f359(benchmark::State& state) {
  auto C = reduce_cubic(primitive_integral_model(build_fiber(Rational(1))), 359);
  for (auto _ : state) {
    auto P = find_smooth_Fp_point(C);
    benchmark::DoNotOptimize(P);
  }
}
BENCHMARK(bm_find_smooth_point_f359)->Unit(benchmark::kMicrosecond);

void bm_aronhold_eval(benchmark::State& state) {
  auto C = primitive_integral_model(build_fiber(Rational(4079, 3839)));
  for (auto _ : state) {
    auto inv = aronhold_invariants(C);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(bm_aronhold_eval)->Unit(benchmark::kMicrosecond);

void bm_count_points(benchmark::State& state) {
  const long p = state.range(0);
  auto C = reduce_cubic(primitive_integral_model(build_fiber(Rational(1))), p);
  for (auto _ : state) {
    long n = count_points(C);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_count_points)->Arg(7)->Arg(97)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
