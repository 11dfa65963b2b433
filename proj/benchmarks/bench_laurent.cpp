#include <benchmark/benchmark.h>

#include "dgt/laurent.hpp"

using namespace dgt;

namespace {

LaurentPoly dense_poly(int degree, long long coeff_span, std::uint64_t seed) {
  Rng rng(seed);
  LaurentPoly f;
  for (int k = 0; k <= degree; ++k) {
    Int c = rng.uniform_int(-coeff_span, coeff_span);
    if (c != 0) f.set(k, c);
  }
  if (f.is_zero()) f.set(0, 1);
  return f;
}

}  // namespace

static void BM_poly_multiply(benchmark::State& state) {
  LaurentPoly f = dense_poly(static_cast<int>(state.range(0)), 100, 1);
  LaurentPoly g = dense_poly(static_cast<int>(state.range(0)), 100, 2);
  for (auto _ : state) {
    LaurentPoly h = f * g;
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_poly_multiply)->Arg(8)->Arg(32)->Arg(128);

static void BM_content(benchmark::State& state) {
  LaurentPoly f = dense_poly(static_cast<int>(state.range(0)), 1000000, 3);
  for (auto _ : state) {
    Int c = content(f);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_content)->Arg(32)->Arg(256);

static void BM_strict_positivity(benchmark::State& state) {
  // positive on (0, inf): the decision walks a full Sturm chain
  LaurentPoly f = dense_poly(static_cast<int>(state.range(0)), 20, 4);
  LaurentPoly sq = f * f;
  sq.add_to(0, 1);
  for (auto _ : state) {
    bool pos = strictly_positive_on_interval(sq, Rat(1, 3), Rat(2, 3));
    benchmark::DoNotOptimize(pos);
  }
}
BENCHMARK(BM_strict_positivity)->Arg(4)->Arg(8)->Arg(12);

static void BM_gauss_check(benchmark::State& state) {
  LaurentPoly f = dense_poly(8, 100, 5);
  LaurentPoly g = dense_poly(8, 100, 6);
  for (auto _ : state) {
    bool ok = content(f * g) == content(f) * content(g);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_gauss_check);
