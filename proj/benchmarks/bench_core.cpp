#include <benchmark/benchmark.h>

#include <vecvar/lineartype.hpp>
#include <vecvar/resolution.hpp>

using namespace vecvar;

namespace {

RatMatrix seeded_matrix(int rows, int cols, std::uint64_t seed) {
  SmallIntSampler s(seed);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = s.next_rat();
  return m;
}

}  // namespace

static void BM_LrCoefficient(benchmark::State& state) {
  Partition mu({3, 2, 1}), nu({3, 2, 1}), lam({4, 4, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(mu, nu, lam));
}
BENCHMARK(BM_LrCoefficient);

static void BM_SchurDimension(benchmark::State& state) {
  Partition lam({4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(schur_dimension_int(lam, 30));
}
BENCHMARK(BM_SchurDimension);

static void BM_RankBareiss(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RatMatrix m = seeded_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankBareiss)->Arg(8)->Arg(16)->Arg(32);

static void BM_ShiftT2(benchmark::State& state) {
  PolynomialFunctor t2 = PolynomialFunctor::parse("0 + 1*[2] + 1*[1,1]");
  for (auto _ : state) benchmark::DoNotOptimize(shift(t2, 4));
}
BENCHMARK(BM_ShiftT2);

static void BM_MinimalSubspace(benchmark::State& state) {
  VarietySpec border = VarietySpec::parse("border_rank_le_2:d=3");
  TensorPoint p = parametrize_sample(border, 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_subspace(p));
}
BENCHMARK(BM_MinimalSubspace);

static void BM_FdcBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fdc_bound(4, 0).F);
}
BENCHMARK(BM_FdcBound);

static void BM_TangentDimension(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  VarietySpec x = VarietySpec::builtin("matrices_rank_le", {{"r", 2}});
  TensorPoint p = sample_matrix_of_rank(4, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_dimension(x, p, n));
}
BENCHMARK(BM_TangentDimension)->Arg(8)->Arg(14)->Arg(21);

static void BM_LocalInverseRoundTrip(benchmark::State& state) {
  VarietySpec fam = VarietySpec::builtin("matrices_rank_le", {{"r", 2}});
  TensorPoint p = sample_matrix_of_rank(5, 2, 3);
  for (auto _ : state) {
    OmegaPoint w = local_inverse(fam, p, 5);
    benchmark::DoNotOptimize(rho(w, 5));
  }
}
BENCHMARK(BM_LocalInverseRoundTrip);

BENCHMARK_MAIN();
