#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "stallings/equivalence.hpp"
#include "stallings/morphism.hpp"

using namespace stallings;
using namespace fixtures;

static void BM_CheckAxioms(benchmark::State& state) {
  const auto& m = pg_hnn().structure();
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(m));
}
BENCHMARK(BM_CheckAxioms);

static void BM_AxiomSentences(benchmark::State& state) {
  const auto& m = pg_hnn().structure();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_axiom_sentences(m));
}
BENCHMARK(BM_AxiomSentences);

// Equivalence of two alternating words of the given length in PG_AM.
static void BM_Equivalent(benchmark::State& state) {
  const auto& p = pg_am();
  Word u, v;
  for (int i = 0; i < state.range(0); ++i) {
    u.push_back(p.element(i % 2 ? "y" : "x"));
    v.push_back(p.element(i % 2 ? "Y" : "X"));
  }
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(p, u, v));
}
BENCHMARK(BM_Equivalent)->Arg(2)->Arg(4)->Arg(8);

static void BM_Canonical(benchmark::State& state) {
  const auto& p = pg_am();
  Word u;
  for (int i = 0; i < state.range(0); ++i) u.push_back(p.element(i % 2 ? "Y" : "X"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical(p, u));
}
BENCHMARK(BM_Canonical)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_FindIsomorphism(benchmark::State& state) {
  const auto& m = pg_hnn().structure();
  std::vector<Elem> all{0, 1, 2, 3, 4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(all, m, m));
}
BENCHMARK(BM_FindIsomorphism);

static void BM_BoundedEquiv(benchmark::State& state) {
  const auto& m = am().spregroup().structure();
  const auto& n = am_swapped().structure();
  for (auto _ : state) benchmark::DoNotOptimize(bounded_f_equiv(m, n, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BoundedEquiv)->Arg(2)->Arg(3);

static void BM_Transfer(benchmark::State& state) {
  const auto& p1 = am().spregroup();
  const auto& p2 = am_swapped();
  std::vector<Word> f{w(p1.pregroup(), "x,y,X"), w(p1.pregroup(), "Y,x")};
  for (auto _ : state) benchmark::DoNotOptimize(transfer(p1, p2, f));
}
BENCHMARK(BM_Transfer);
BENCHMARK_MAIN();
