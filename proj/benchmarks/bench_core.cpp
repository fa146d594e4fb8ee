#include <random>

#include <benchmark/benchmark.h>

#include "dqg/convolution.hpp"
#include "dqg/linalg.hpp"
#include "dqg/random.hpp"
#include "dqg/slice.hpp"

using namespace dqg;

static void BM_RankExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const DenseMatrix m = random_matrix(n, n, rng, ScalarMode::Exact);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(16)->Arg(32);

static void BM_RankFloat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const DenseMatrix m = random_matrix(n, n, rng, ScalarMode::Float);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankFloat)->Arg(8)->Arg(32)->Arg(128);

static void BM_ConvolveS3(benchmark::State& state) {
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  std::mt19937_64 rng(3);
  const auto& alg = s3.algebra();
  const ReducedFunctional a(s3.haar(), random_element(alg, alg->window(0), rng, ScalarMode::Exact, 6));
  const ReducedFunctional b(s3.haar(), random_element(alg, alg->window(0), rng, ScalarMode::Exact, 6));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b, s3));
}
BENCHMARK(BM_ConvolveS3);

static void BM_ConvolveSU2(benchmark::State& state) {
  const auto su = dual_of_su2(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(4);
  const auto& alg = su.algebra();
  const ReducedFunctional a(su.haar(), random_element(alg, alg->window(0), rng, ScalarMode::Float));
  const ReducedFunctional b(su.haar(), random_element(alg, alg->window(0), rng, ScalarMode::Float));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b, su));
}
BENCHMARK(BM_ConvolveSU2)->Arg(3)->Arg(5);

static void BM_SliceDimPolynomial(benchmark::State& state) {
  const auto z = dual_of_group(GroupModel::integers());
  const auto y = coproduct_of_multiplier(z, Multiplier::polynomial(z.algebra(), {Scalar(1), Scalar(0), Scalar(1)}));
  for (auto _ : state) benchmark::DoNotOptimize(slice_space_dimension(y, z));
}
BENCHMARK(BM_SliceDimPolynomial)->Unit(benchmark::kMillisecond);

static void BM_SliceDimPointMass(benchmark::State& state) {
  const auto z = dual_of_group(GroupModel::integers());
  const auto y = coproduct(z, Element::matrix_unit(z.algebra(), Index(0), 0, 0));
  SliceOptions o;
  o.budget = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slice_space_dimension(y, z, o));
}
BENCHMARK(BM_SliceDimPointMass)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
