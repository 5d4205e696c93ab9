#include <benchmark/benchmark.h>

#include <random>

#include "oracles.hpp"
#include "symcert/cyclic_cover.hpp"
#include "symcert/exact_linalg.hpp"
#include "symcert/symplectic.hpp"

using namespace symcert;

namespace {

IntMatrix bench_matrix(std::size_t n) {
  std::mt19937_64 rng(42 + n);
  return symcert::testing::random_matrix(rng, n, n, -5, 5);
}

}  // namespace

static void BM_DetBareiss(benchmark::State& state) {
  const IntMatrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_DetBareiss)->DenseRange(2, 12, 2)->Arg(24);

static void BM_DetFromTraces(benchmark::State& state) {
  const IntMatrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_from_traces(m));
}
BENCHMARK(BM_DetFromTraces)->DenseRange(2, 12, 2)->Arg(24);

static void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

static void BM_PaperMapMValue(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const IntMatrix map = build_paper_map(d);
  const CoverModel cover = build_cover_space(d);
  for (auto _ : state) benchmark::DoNotOptimize(m_value(map, cover.form));
}
BENCHMARK(BM_PaperMapMValue)->RangeMultiplier(2)->Range(2, 64);

static void BM_OrbitSum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const std::size_t dim = std::size_t{1} << n;
  const IntMatrix shift = IntMatrix::cyclic_shift(dim);
  const IntVector c = unit_vector(dim, 0);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_sum_subspace(shift, c, n, n / 2));
}
BENCHMARK(BM_OrbitSum)->DenseRange(4, 10, 2);
BENCHMARK_MAIN();
