#include <benchmark/benchmark.h>

#include <vector>

#include "peterson/expansion.hpp"
#include "peterson/groebner.hpp"
#include "peterson/localization.hpp"
#include "peterson/monk.hpp"
#include "peterson/relations.hpp"
#include "peterson/restriction.hpp"
#include "peterson/stirling.hpp"

using namespace peterson;

namespace {

void BM_MonkProductSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<SubsetIndex> subsets = all_subsets(n);
  for (auto _ : state) {
    for (const SubsetIndex& a : subsets)
      for (int i = 1; i <= n - 1; ++i)
        benchmark::DoNotOptimize(monk_product(n, i, a));
  }
  state.SetItemsProcessed(state.iterations() * subsets.size() * (n - 1));
}
BENCHMARK(BM_MonkProductSweep)->Arg(6)->Arg(8)->Arg(10);

void BM_ExpandPowerOfP1(benchmark::State& state) {
  const int n = 9;
  const int k = static_cast<int>(state.range(0));
  const std::vector<int> factors(k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(expand_monomial(n, factors));
}
BENCHMARK(BM_ExpandPowerOfP1)->Arg(4)->Arg(8);

void BM_LocalizeBasisClass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SubsetIndex a = SubsetIndex::interval(n, 1, n / 2);
  const BasisExpansion e = BasisExpansion::basis_class(a);
  for (auto _ : state) benchmark::DoNotOptimize(localize(e));
}
BENCHMARK(BM_LocalizeBasisClass)->Arg(6)->Arg(8)->Arg(10);

void BM_OracleRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LocalizedClass p1 =
      localize(BasisExpansion::basis_class(SubsetIndex::singleton(n, 1)));
  const LocalizedClass pa = localize(
      BasisExpansion::basis_class(SubsetIndex::interval(n, 1, n - 1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(expand_localized(pointwise_product(p1, pa)));
}
BENCHMARK(BM_OracleRoundTrip)->Arg(5)->Arg(7);

void BM_IdealK(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_K(n));
}
BENCHMARK(BM_IdealK)->Arg(4)->Arg(6);

void BM_QuadraticGroebner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<MultiPoly> quadratics;
  for (const Relation& r : ideal_K(n).relations)
    if (r.poly.degree() <= 2) quadratics.push_back(r.poly);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(n, quadratics));
}
BENCHMARK(BM_QuadraticGroebner)->Arg(4)->Arg(5)->Arg(6);

void BM_Stirling2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stirling2(40, 20));
}
BENCHMARK(BM_Stirling2);

}  // namespace

BENCHMARK_MAIN();
