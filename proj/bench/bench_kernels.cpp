// Serial reference implementations against their OpenMP counterparts.
//
//   strata_bench --benchmark_filter=Associativity

#include <benchmark/benchmark.h>

#include "strata/kernels.hpp"
#include "strata/verify.hpp"
#include "strata/zoo.hpp"

namespace {

  using namespace strata;

  // An associative table of order p * q, so the kernel scans every triple.
  Semigroup band(std::int64_t n) {
    return zoo::rectangular_band(2, static_cast<std::size_t>(n / 2));
  }

  void BM_AssociativitySerial(benchmark::State& state) {
    auto const S = band(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          kernels::first_nonassociative_triple_serial(S.size(), S.flat_table()));
    }
    state.SetComplexityN(state.range(0));
  }

  void BM_AssociativityParallel(benchmark::State& state) {
    auto const S = band(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          kernels::first_nonassociative_triple_parallel(S.size(), S.flat_table()));
    }
    state.SetComplexityN(state.range(0));
  }

  BENCHMARK(BM_AssociativitySerial)->RangeMultiplier(2)->Range(16, 256)->Complexity();
  BENCHMARK(BM_AssociativityParallel)->RangeMultiplier(2)->Range(16, 256)->Complexity();

  void BM_EnumerateSerial(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(zoo::enumerate_associative(n));
    }
  }

  void BM_EnumerateParallel(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(zoo::enumerate_associative_parallel(n));
    }
  }

  BENCHMARK(BM_EnumerateSerial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
  BENCHMARK(BM_EnumerateParallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

  void BM_SuitesSerial(benchmark::State& state) {
    auto const tables = zoo::enumerate_associative(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify::run_serial(tables));
    }
  }

  void BM_SuitesParallel(benchmark::State& state) {
    auto const tables = zoo::enumerate_associative(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify::run_parallel(tables));
    }
  }

  BENCHMARK(BM_SuitesSerial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
  BENCHMARK(BM_SuitesParallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

  void BM_ProductsSerial(benchmark::State& state) {
    auto const tables = zoo::enumerate_associative(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify::run_products_serial(tables, tables));
    }
  }

  void BM_ProductsParallel(benchmark::State& state) {
    auto const tables = zoo::enumerate_associative(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify::run_products_parallel(tables, tables));
    }
  }

  BENCHMARK(BM_ProductsSerial)->Unit(benchmark::kMillisecond);
  BENCHMARK(BM_ProductsParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
