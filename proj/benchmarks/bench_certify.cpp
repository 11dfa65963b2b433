#include <benchmark/benchmark.h>

#include "dgt/certify.hpp"
#include "dgt/config.hpp"
#include "dgt/lab.hpp"

using namespace dgt;

static void BM_certify_flagship(benchmark::State& state) {
  for (auto _ : state) {
    auto seq = sequence_from_string("3+2x");
    CertReport r = antifd_verdict(*seq);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_certify_flagship);

static void BM_q_product(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    auto seq = sequence_from_string("3+2x");  // fresh cache each round
    state.ResumeTiming();
    benchmark::DoNotOptimize(seq->q_product(n));
  }
}
BENCHMARK(BM_q_product)->Arg(16)->Arg(64)->Arg(128);

static void BM_positivity_search(benchmark::State& state) {
  auto seq = sequence_from_string("1+x");
  LimitElement e = make_element(seq, parse_poly("1 - x + x^2"), 2);
  for (auto _ : state) {
    Verdict v = is_positive(e);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_positivity_search);

static void BM_min_norm_witness(benchmark::State& state) {
  auto ex = build_example_2_4(6, 3.14159265358979312);
  long long bound = state.range(0);
  for (auto _ : state) {
    auto w = min_norm_witness(ex, bound, 0.05);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_min_norm_witness)->Arg(6)->Arg(12)->Arg(20);
