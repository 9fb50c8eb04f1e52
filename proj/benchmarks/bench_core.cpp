#include <benchmark/benchmark.h>

#include <cmath>

#include "bqha/bqha.hpp"

using namespace bqha;

namespace {

BallPoint point(int n, double r) {
  CVector z = CVector::Zero(n);
  z(0) = std::polar(r, 0.3);
  if (n == 2) {
    z(0) *= std::sqrt(0.6);
    z(1) = std::polar(r * std::sqrt(0.4), -1.1);
  }
  return BallPoint(z);
}

}  // namespace

static void BM_PiMatrix(benchmark::State& state) {
  const BasisSpec basis(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const BallPoint z = point(basis.n(), 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(pi_matrix(basis, z));
  state.counters["dim"] = basis.dim();
}
BENCHMARK(BM_PiMatrix)->Args({1, 40})->Args({1, 160})->Args({2, 12})->Args({2, 24})->Unit(benchmark::kMicrosecond);

static void BM_ToeplitzQuadrature(benchmark::State& state) {
  const BasisSpec basis(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const QuadratureGrid grid = QuadratureGrid::for_degree(basis.n(), basis.max_degree());
  const SymbolFunction a = symbols::oscillatory(6.0);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz(a, grid, basis));
  state.counters["nodes"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_ToeplitzQuadrature)->Args({1, 40})->Args({2, 12})->Unit(benchmark::kMillisecond);

static void BM_FunConvOp(benchmark::State& state) {
  const BasisSpec basis(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const QuadratureGrid grid = QuadratureGrid::for_degree(basis.n(), basis.max_degree());
  const SymbolFunction a = symbols::power(1.0);
  const OperatorMatrix ph = phi(basis);
  for (auto _ : state) benchmark::DoNotOptimize(fun_conv_op(a, ph, grid, 0.8));
}
BENCHMARK(BM_FunConvOp)->Args({1, 20})->Args({1, 40})->Args({2, 8})->Unit(benchmark::kMillisecond);

static void BM_ExtendedAlphaBerezin(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const ExtendedRadialOperator s = ExtendedRadialOperator::toeplitz(*symbols::power(1.0).profile(), 1, depth);
  const double alpha = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_berezin(s, 0.999, alpha, 40));
}
BENCHMARK(BM_ExtendedAlphaBerezin)->Args({500, 4})->Args({2000, 4})->Args({2000, 12})->Unit(benchmark::kMicrosecond);

static void BM_MomentFit(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const LevelSequence target = moment_levels(*symbols::weight(1.0).profile(), 1, d);
  for (auto _ : state) benchmark::DoNotOptimize(fit_polynomial_profile(target, d + 1));
}
BENCHMARK(BM_MomentFit)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
