#include <benchmark/benchmark.h>

#include <zetalab/claims.hpp>
#include <zetalab/power_sums.hpp>
#include <zetalab/reference_functions.hpp>

namespace ps = zetalab::power_sums;

static void BM_BruteForceSum(benchmark::State& state) {
  const ps::ProgressionQuery q{{1.0, 0.5, 0.25, -0.75},
                               state.range(0), 6};
  for (auto _ : state) benchmark::DoNotOptimize(ps::brute_force_sum(q));
}
BENCHMARK(BM_BruteForceSum)->Arg(64)->Arg(1024)->Arg(65536);

static void BM_RefEta(benchmark::State& state) {
  zetalab::ref::PrecisionPolicy policy;
  policy.series_terms = static_cast<int>(state.range(0));
  const zetalab::cplx s{0.5, 14.134725};
  for (auto _ : state)
    benchmark::DoNotOptimize(zetalab::ref::ref_eta(s, policy));
}
BENCHMARK(BM_RefEta)->Arg(32)->Arg(96)->Arg(192);

static void BM_RefZetaFunctionalEq(benchmark::State& state) {
  const zetalab::cplx s{-3.5, 12.0};
  for (auto _ : state) benchmark::DoNotOptimize(zetalab::ref::ref_zeta(s));
}
BENCHMARK(BM_RefZetaFunctionalEq);

static void BM_ClaimedZeta(benchmark::State& state) {
  zetalab::claims::ClaimSpec spec;
  spec.Z = {3.0, 0.0};
  spec.n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(zetalab::claims::claimed_zeta(spec));
}
BENCHMARK(BM_ClaimedZeta)->Arg(3)->Arg(6)->Arg(12);

BENCHMARK_MAIN();
