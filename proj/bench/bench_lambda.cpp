// Serial reference vs OpenMP evaluation of the surgery formula on random
// integer-framed links.

#include <benchmark/benchmark.h>

#include <random>

#include "cwl/lescop.hpp"
#include "cwl/path_sum.hpp"

namespace {

cwl::FramedLink random_link(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> framing(-6, 6), lk(-3, 3), a1(-2, 2);
  std::vector<cwl::Rational> framings;
  for (int i = 0; i < n; ++i) framings.emplace_back(framing(rng));
  cwl::FramedLink link(std::move(framings));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) link.set_linking(i, j, lk(rng));
  for (cwl::SubsetIndex I : cwl::nonempty_subsets(n)) link.set_a1(I, a1(rng));
  return link;
}

void BM_LambdaSerial(benchmark::State& state) {
  const cwl::FramedLink link = random_link(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cwl::lescop_lambda_serial(link));
}

void BM_LambdaParallel(benchmark::State& state) {
  const cwl::FramedLink link = random_link(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cwl::lescop_lambda(link));
}

void BM_PathTable(benchmark::State& state) {
  const cwl::SymRatMatrix A =
      cwl::surgery_matrix(random_link(static_cast<int>(state.range(0)), 11));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    cwl::PathSumTable table(A, parallel);
    benchmark::DoNotOptimize(table(1, 1, cwl::SubsetIndex{}));
  }
}

}  // namespace

BENCHMARK(BM_LambdaSerial)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LambdaParallel)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PathTable)
    ->ArgsProduct({{8, 10, 12}, {0, 1}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
