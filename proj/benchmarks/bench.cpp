#include <benchmark/benchmark.h>

#include <cmath>

#include "backflow/current.hpp"
#include "backflow/eig.hpp"
#include "backflow/kernel.hpp"
#include "backflow/line_limit.hpp"
#include "backflow/two_mode.hpp"

namespace {

const backflow::RingParams kHeadline(0.73, 0.0, M_PI * 0.36252);

void BM_KernelBuild(benchmark::State& state) {
  const long n = state.range(0);
  const backflow::ModeTable modes(kHeadline, n);
  for (auto _ : state) {
    auto k = backflow::build_kernel(modes, n);
    benchmark::DoNotOptimize(k.entries.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_KernelBuild)->Arg(200)->Arg(500)->Arg(1000)->Complexity();

void BM_MinEigenvalue(benchmark::State& state) {
  const long n = state.range(0);
  const auto k = backflow::build_kernel(kHeadline, n);
  for (auto _ : state) {
    double lam = backflow::min_eigenvalue(k.entries);
    benchmark::DoNotOptimize(lam);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MinEigenvalue)->Arg(200)->Arg(500)->Arg(1000)->Complexity();

void BM_TwoModeMin(benchmark::State& state) {
  const backflow::RingParams p(0.05, 0.0, M_PI * 0.195067);
  for (auto _ : state) {
    double v = backflow::two_mode_min(p, 0, 1);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TwoModeMin);

void BM_LineNystrom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = backflow::line_min_eig(backflow::LineParams{0.01, 20.0, n}, false);
    benchmark::DoNotOptimize(r.lambda_min);
  }
}
BENCHMARK(BM_LineNystrom)->Arg(200)->Arg(400)->Arg(800);

void BM_CurrentTrace(benchmark::State& state) {
  const long n = state.range(0);
  const backflow::ModeTable modes(kHeadline, n);
  Eigen::VectorXd c(n + 1);
  for (long l = 0; l <= n; ++l)
    c(l) = std::exp(-0.01 * static_cast<double>(l));
  c.normalize();
  const auto grid = backflow::uniform_grid(-0.5, 0.5, 1001);
  for (auto _ : state) {
    auto tr = backflow::current_trace(modes, c, grid);
    benchmark::DoNotOptimize(tr.j_times_T.data());
  }
}
BENCHMARK(BM_CurrentTrace)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
