#include <benchmark/benchmark.h>

#include "midx/enumerate.hpp"
#include "midx/geometry.hpp"
#include "midx/matrix.hpp"
#include "midx/tree.hpp"

namespace {

void BM_EnumerateNegative(benchmark::State& state) {
  const midx::GradingContext ctx(midx::make_rational(1, state.range(0)), true);
  for (auto _ : state) {
    auto out = midx::enumerate_negative(ctx);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_EnumerateNegative)->Arg(1)->Arg(2)->Arg(3);

void BM_KernelMatrix(benchmark::State& state) {
  for (auto _ : state) {
    auto report = midx::assemble_kernel_matrix(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_KernelMatrix)->Arg(4)->Arg(5)->Arg(6);

void BM_Fiber(benchmark::State& state) {
  const midx::MultiIndex beta = midx::parse_multi_index("N0^4*Q0^3");
  for (auto _ : state) {
    auto trees = midx::fiber(beta);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_Fiber);

void BM_NablaSet(benchmark::State& state) {
  for (auto _ : state) {
    auto set = midx::generate_nabla_set(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_NablaSet)->Arg(4)->Arg(5)->Arg(6);

void BM_NullspaceN6(benchmark::State& state) {
  const midx::KernelReport report = midx::assemble_kernel_matrix(6);
  for (auto _ : state) {
    auto basis = midx::nullspace_basis(report.matrix);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_NullspaceN6);

}  // namespace

BENCHMARK_MAIN();
