#include <benchmark/benchmark.h>

#include <random>

#include "vucert/smith.hpp"
#include "vucert/triangularize.hpp"

using namespace vucert;

namespace {

FieldMatrix random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t n) {
  std::uniform_int_distribution<long> entry(-3, 3);
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, CycloNumber::from_rational(f, Rational(entry(rng))));
  return m;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-10, 10);
  std::vector<Int> entries(n * n);
  for (auto& e : entries) e = entry(rng);
  return IntMatrix(n, n, std::move(entries));
}

}  // namespace

static void BM_CharPoly(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto field = CycloField::get(4);
  FieldMatrix m = random_matrix(rng, field, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(3)->Arg(5);

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  IntMatrix m = random_int_matrix(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5);

static void BM_RowSpaceMembership(benchmark::State& state) {
  std::mt19937_64 rng(3);
  IntMatrix m = random_int_matrix(rng, 8);
  std::vector<Int> e(8, Int(0));
  e[3] = 1;
  for (auto _ : state) {
    RowSpace space(m);
    benchmark::DoNotOptimize(space.contains(e));
  }
}
BENCHMARK(BM_RowSpaceMembership);
