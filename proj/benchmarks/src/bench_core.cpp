#include <benchmark/benchmark.h>

#include "chordal/betti.hpp"
#include "chordal/determinantal.hpp"
#include "chordal/groebner.hpp"
#include "chordal/hilbert.hpp"
#include "chordal/secant.hpp"

using namespace chordal;

static void BM_BuchbergerRnc(benchmark::State& state) {
  PrimeField k(kDefaultPrime);
  auto I = rnc_ideal(k, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto gb = buchberger(I);
    benchmark::DoNotOptimize(gb.elems.size());
  }
}
BENCHMARK(BM_BuchbergerRnc)->Arg(4)->Arg(6)->Arg(8);

static void BM_HilbertRnc(benchmark::State& state) {
  PrimeField k(kDefaultPrime);
  auto gb = buchberger(rnc_ideal(k, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto h = hilbert_data(gb, 6);
    benchmark::DoNotOptimize(h.degree);
  }
}
BENCHMARK(BM_HilbertRnc)->Arg(6)->Arg(10);

static void BM_BettiRnc(benchmark::State& state) {
  PrimeField k(kDefaultPrime);
  auto I = rnc_ideal(k, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto t = betti_table(I);
    benchmark::DoNotOptimize(t.pd);
  }
}
BENCHMARK(BM_BettiRnc)->Arg(4)->Arg(6);

static void BM_SecantRnc(benchmark::State& state) {
  PrimeField k(kDefaultPrime);
  auto I = rnc_ideal(k, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto sec = secant_ideal(I, 1);
    benchmark::DoNotOptimize(sec.ideal.gens.size());
  }
}
BENCHMARK(BM_SecantRnc)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
