#include <benchmark/benchmark.h>

#include "vucert/cyclotomic.hpp"

using namespace vucert;

static void BM_CycloMul(benchmark::State& state) {
  auto field = CycloField::get(state.range(0));
  CycloNumber a = CycloNumber::root_of_unity(field, 1) + CycloNumber::from_rational(field, Rational(3, 7));
  CycloNumber b = a * a + CycloNumber::one(field);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(4)->Arg(12)->Arg(36);

static void BM_CycloInverse(benchmark::State& state) {
  auto field = CycloField::get(state.range(0));
  CycloNumber a = CycloNumber::root_of_unity(field, 1) + CycloNumber::from_rational(field, Rational(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycloInverse)->Arg(4)->Arg(12);

static void BM_CyclotomicPoly(benchmark::State& state) {
  for (auto _ : state) {
    for (long m = 1; m <= state.range(0); ++m) benchmark::DoNotOptimize(cyclotomic_poly(m));
  }
}
BENCHMARK(BM_CyclotomicPoly)->Arg(30);

static void BM_KroneckerOracle(benchmark::State& state) {
  IntPoly p({Int(1), Int(0), Int(-1), Int(0), Int(1)});
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_oracle(p));
}
BENCHMARK(BM_KroneckerOracle);
