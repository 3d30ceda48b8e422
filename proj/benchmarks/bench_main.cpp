#include <benchmark/benchmark.h>

#include "kron/characters.hpp"
#include "kron/families.hpp"
#include "kron/plane_partitions.hpp"
#include "kron/quasipoly.hpp"
#include "kron/reduced.hpp"
#include "kron/series.hpp"
#include "kron/tableaux.hpp"

namespace {

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kron::character_table(n));
}
BENCHMARK(BM_CharacterTable)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_KroneckerCoeff(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto l = kron::pad(kron::Partition{2, 1}, n);
  const auto m = kron::pad(kron::Partition{2, 2}, n);
  const auto v = kron::pad(kron::Partition{3}, n);
  for (auto _ : state) benchmark::DoNotOptimize(kron::kronecker_coeff(l, m, v));
}
BENCHMARK(BM_KroneckerCoeff)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_CountKronTableaux(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto shape = kron::pad(kron::rectangle(k, 3), 6 * k);
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (const auto& alpha : kron::partitions_of(k, 4)) total += kron::count_kron_tableaux(shape, shape, alpha);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CountKronTableaux)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ReducedKron(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto rect = kron::rectangle(k, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kron::reduced_kron(rect, rect, kron::Partition{k}, kron::Pathway::tableau));
}
BENCHMARK(BM_ReducedKron)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_FSeries(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kron::F_series(a, 1000));
}
BENCHMARK(BM_FSeries)->DenseRange(2, 8, 3);

void BM_QuasipolyExtract(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kron::family_quasipolynomial(kron::QuasiFamily::family1, a));
}
BENCHMARK(BM_QuasipolyExtract)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_EnumeratePlanePartitions(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kron::enumerate_pp(4, 4, t));
}
BENCHMARK(BM_EnumeratePlanePartitions)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

void BM_BijectionFamily3(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const auto betas = kron::enumerate_coloured(kron::alphabet_C(3), j);
  for (auto _ : state)
    for (const auto& beta : betas) benchmark::DoNotOptimize(kron::bij_family3(beta, 3, 2 * j));
}
BENCHMARK(BM_BijectionFamily3)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
