#include <benchmark/benchmark.h>

#include "hilbsym/algebra/sampling.hpp"
#include "hilbsym/fock/energy.hpp"
#include "hilbsym/integral/integral.hpp"
#include "hilbsym/qde/connection.hpp"
#include "hilbsym/qde/series.hpp"

using namespace hilbsym;

namespace {

algebra::NumericContext<double> seeded(int n) { return algebra::sample_context<double>(1, n).ctx; }

void BM_MdSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock::m_d_series(n, 12));
}
BENCHMARK(BM_MdSeries)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SeriesSolveAll(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qde::series_solve_all(2, order));
}
BENCHMARK(BM_SeriesSolveAll)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_KFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = seeded(n);
  for (auto _ : state) benchmark::DoNotOptimize(qde::k_formula<double>(n, ctx.t1, ctx.t2, ctx.z));
}
BENCHMARK(BM_KFormula)->DenseRange(1, 4);

void BM_ContinueToMinusOne(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = seeded(n);
  for (auto _ : state) benchmark::DoNotOptimize(qde::continue_to_minus_one<double>(n, ctx));
}
BENCHMARK(BM_ContinueToMinusOne)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ContinueToMinusOneExtended(benchmark::State& state) {
  const auto s = algebra::sample_context<algebra::Float128>(1, 2, algebra::Branch::minus_pi, 1e-20);
  for (auto _ : state) benchmark::DoNotOptimize(qde::continue_to_minus_one<algebra::Float128>(2, s.ctx));
}
BENCHMARK(BM_ContinueToMinusOneExtended)->Unit(benchmark::kMillisecond);

void BM_DiagramCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = seeded(n);
  const auto lam = partitions::enumerate(n).front();
  for (auto _ : state) benchmark::DoNotOptimize(integral::diagram_check(lam, ctx));
}
BENCHMARK(BM_DiagramCheck)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
