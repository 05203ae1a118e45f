#include <benchmark/benchmark.h>

#include <random>

#include "nrack/constructions.hpp"
#include "nrack/enumerate.hpp"
#include "nrack/homology.hpp"
#include "nrack/leibniz.hpp"
#include "nrack/presentation.hpp"
#include "nrack/smith.hpp"

using namespace nrack;

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> entry(-9, 9);
  std::vector<long long> values(n * n);
  for (auto& v : values) v = entry(rng);
  const IntMatrix m(n, n, values);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->Arg(8)->Arg(16)->Arg(32);

static void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nracks(n, m, StructureFilter::NRack));
}
BENCHMARK(BM_Enumerate)->Args({2, 3})->Args({3, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void BM_RackHomology(benchmark::State& state) {
  const auto x = build_z4_module_nrack(3, 4);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto c = rack_chain_complex(x, k + 1);
    benchmark::DoNotOptimize(homology(c, k, Coefficients::integers()));
  }
}
BENCHMARK(BM_RackHomology)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_QuandleHomologyConjS3(benchmark::State& state) {
  const auto x = build_conjugation_nrack(symmetric_group(3), 2);
  for (auto _ : state) {
    const auto c = chain_complex(x, Variant::Quandle, 4);
    benchmark::DoNotOptimize(homology(c, 3, Coefficients::integers()));
  }
}
BENCHMARK(BM_QuandleHomologyConjS3)->Unit(benchmark::kMillisecond);

static void BM_FundamentalIdentityNambu(benchmark::State& state) {
  const auto l = nambu_bracket_4d();
  for (auto _ : state) benchmark::DoNotOptimize(check_fundamental_identity(l));
}
BENCHMARK(BM_FundamentalIdentityNambu)->Unit(benchmark::kMillisecond);

static void BM_AssociatedGroupConjS3(benchmark::State& state) {
  const auto x = build_conjugation_nrack(symmetric_group(3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(abelianization(associated_group_presentation(x)));
}
BENCHMARK(BM_AssociatedGroupConjS3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
