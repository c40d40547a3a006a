#include <benchmark/benchmark.h>

#include "eschenburg/classifier.hpp"
#include "eschenburg/defect.hpp"
#include "eschenburg/kreck_stolz.hpp"
#include "eschenburg/search.hpp"

using namespace eschenburg;

static void BM_DefectNumerator(benchmark::State& state) {
  const i64 n = state.range(0);
  DefectInput in;
  in.n = n;
  in.ell = 1;
  in.w = {1, n - 1, n + 2 - (n % 2 == 0 ? 1 : 0), 5 % n == 0 ? 7 : 5};
  // keep the weights units mod n
  for (auto& w : in.w)
    while (gcd(w, n) != 1) ++w;
  i128 s = 0;
  for (i64 w : in.w) s += w;
  if (s % 2 != 0) {
    in.w[3] += n;
    s += n;
  }
  if (s % 2 != 0) in.w[3] += n;
  in.shift = (in.w[0] + in.w[1] + in.w[2] + in.w[3]) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(defect_numerator(in));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DefectNumerator)->RangeMultiplier(4)->Range(16, 65536)->Complexity(benchmark::oN);

static void BM_KreckStolz(benchmark::State& state) {
  const ParameterVector pv = make_vector(548, 469, -355, 432, 230, 0);
  for (auto _ : state) benchmark::DoNotOptimize(kreck_stolz(pv));
}
BENCHMARK(BM_KreckStolz);

static void BM_Enumerate(benchmark::State& state) {
  const i64 rmax = state.range(0);
  for (auto _ : state) {
    i64 count = 0;
    enumerate_parameter_vectors(rmax, [&](const ParameterVector&, i64) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->Arg(1000)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
  RunConfig cfg;
  cfg.rmax = state.range(0);
  cfg.shards = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_search(cfg).vectors);
}
BENCHMARK(BM_Search)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
