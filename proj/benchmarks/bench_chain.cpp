#include <benchmark/benchmark.h>

#include "dgt/initial_hom.hpp"

using namespace dgt;

static void BM_chain_bounded(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  std::vector<Rat> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(Rat(1) + rng.uniform_rat(-9, 9, 7) / 100);
  auto norm = [](const Rat& v) { return abs_rat(v); };
  for (auto _ : state) {
    auto sol = solve_chain_bounded(Int(2), Int(3), u, Rat(1), Rat(1), Rat(1, 10), norm);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_chain_bounded)->Arg(4)->Arg(16)->Arg(64);

static void BM_integerize(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  DyadicVectorGroup g(1);
  std::vector<DyadicVectorGroup::Element> u(n, g.unit());
  std::vector<QVec> uq;
  for (const auto& e : u) uq.push_back(g.to_q0(e));
  auto sol = solve_chain_bounded(Int(2), Int(3), uq, g.to_q0(g.unit()), Rat(1), Rat(1, 10),
                                 [&](const QVec& q) { return g.q0_norm(q); });
  for (auto _ : state) {
    auto v = integerize_chain(g, Int(2), Int(3), u, sol.x, Rat(1, 50));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_integerize)->Arg(2)->Arg(4)->Arg(8);

static void BM_initial_hom_stages(benchmark::State& state) {
  std::size_t stages = static_cast<std::size_t>(state.range(0));
  std::vector<BinomialSequence::Pair> pairs;
  for (std::size_t i = 0; i < stages; ++i) pairs.push_back({Int(5 + 2 * i), Int(2)});
  BinomialSequence seq(pairs);
  DyadicVectorGroup g(2);
  for (auto _ : state) {
    auto h = build_initial_hom(seq, g, g.unit(), stages);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_initial_hom_stages)->Arg(1)->Arg(2)->Arg(3)->Arg(4);
