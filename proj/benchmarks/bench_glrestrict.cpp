#include "glrestrict/kernel.hpp"
#include "glrestrict/overalg.hpp"
#include "glrestrict/random.hpp"
#include "glrestrict/rep_space.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace glr;

void BM_PolyMultiply(benchmark::State& state) {
  RandomSource rng(1);
  const std::vector<VarId> vars{VarId::z(1, 2), VarId::z(1, 3), VarId::z(2, 3), VarId::u(1, 2), VarId::u(1, 3)};
  const int terms = static_cast<int>(state.range(0));
  const MultiPoly a = rng.poly(vars, terms, 4);
  const MultiPoly b = rng.poly(vars, terms, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_SymbolicDet(benchmark::State& state) {
  RandomSource rng(2);
  const PolyMatrix m = rng.poly_matrix(static_cast<int>(state.range(0)), {VarId::z(1, 2), VarId::z(2, 3), VarId::u(1, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_SymbolicDet)->DenseRange(3, 6);

void BM_BuildKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<long> r;
  for (int j = 0; j <= n; ++j) r.push_back(n - j);
  const Signature top(r);
  const auto qs = enumerate_interlacing(top);
  kernel_factors(n);
  for (auto _ : state)
    for (const auto& q : qs) benchmark::DoNotOptimize(build_kernel(KernelParams(top, q)));
}
BENCHMARK(BM_BuildKernel)->DenseRange(1, 4);

void BM_BuildRepSpace(benchmark::State& state) {
  const Signature p({state.range(0), 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(build_rep_space(3, p));
}
BENCHMARK(BM_BuildRepSpace)->DenseRange(1, 4);

void BM_Intertwining(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<long> r;
  for (int j = 0; j <= n; ++j) r.push_back(n + 1 - j);
  const Signature top(r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_intertwining(n, top, Corner::kRaise));
    benchmark::DoNotOptimize(verify_intertwining(n, top, Corner::kLower));
  }
}
BENCHMARK(BM_Intertwining)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
