#include "trilie/cohomology.hpp"
#include "trilie/linalg.hpp"
#include "trilie/nslie.hpp"
#include "trilie/twistop.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace trilie;

ThreeLieAlgebra simple4() {
  ThreeLieAlgebra g(4);
  g.set(1, 2, 3, Vec::unit(4, 0));
  g.set(0, 2, 3, -Vec::unit(4, 1));
  g.set(0, 1, 3, Vec::unit(4, 2));
  g.set(0, 1, 2, -Vec::unit(4, 3));
  return g;
}

ThreeLieAlgebra small3() {
  ThreeLieAlgebra g(3);
  g.set(0, 1, 2, Vec::unit(3, 1));
  return g;
}

Mat nijenhuis_map() { return Mat{{2, 0, 0}, {0, 3, 5}, {0, 0, 3}}; }

TwistedOperator inverse_op() {
  const ThreeLieAlgebra g = simple4();
  Mat theta0 = Mat::identity(4);
  theta0(0, 1) = 2;
  theta0(2, 3) = Rational(-1, 3);
  return inverse_cochain_operator(g, adjoint(g), theta0);
}

void BM_RankDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankDense)->Arg(8)->Arg(16)->Arg(32);

void BM_Filippov(benchmark::State& state) {
  const ThreeLieAlgebra g = simple4();
  for (auto _ : state) benchmark::DoNotOptimize(check_filippov(g).passed());
}
BENCHMARK(BM_Filippov);

void BM_CheckTwisted(benchmark::State& state) {
  const TwistedOperator op = inverse_op();
  for (auto _ : state) benchmark::DoNotOptimize(check_twisted(op).passed());
}
BENCHMARK(BM_CheckTwisted);

void BM_Check3NS(benchmark::State& state) {
  const ThreeNSLieAlgebra a = from_nijenhuis_ns(small3(), nijenhuis_map());
  for (auto _ : state) benchmark::DoNotOptimize(check_3ns(a).passed());
}
BENCHMARK(BM_Check3NS);

void BM_DifferentialMatrix(benchmark::State& state) {
  const TwistedOperator op = inverse_op();
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_differential_matrix(op, degree, 1));
}
BENCHMARK(BM_DifferentialMatrix)->DenseRange(0, 2);

void BM_Cohomology(benchmark::State& state) {
  const TwistedOperator op = inverse_op();
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(op, degree, kDefaultCochainCap, 1).dim_cohomology);
}
BENCHMARK(BM_Cohomology)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
