// Parallel kernels against their serial twins. Thread count follows
// OMP_NUM_THREADS / TRACECERT_THREADS.

#include <benchmark/benchmark.h>

#include "tracecert/certificate.hpp"
#include "tracecert/kernels.hpp"
#include "tracecert/trace_oracle.hpp"
#include "tracecert/verifier.hpp"

using namespace tracecert;

static void BM_multiply_parallel(benchmark::State& state) {
  const ExactMatrix u = build_U(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(u, u));
}
static void BM_multiply_serial(benchmark::State& state) {
  const ExactMatrix u = build_U(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::multiply(u, u));
}
BENCHMARK(BM_multiply_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_oracle_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_polynomial(static_cast<int>(state.range(0)), 6, 2));
}
static void BM_oracle_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::coefficient_polynomial(static_cast<int>(state.range(0)), 6, 2));
}
BENCHMARK(BM_oracle_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_expand_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expand_certificate(static_cast<int>(state.range(0))));
}
static void BM_expand_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::expand_certificate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_expand_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_expand_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_canonical_type_reduced(benchmark::State& state) {
  const Monomial m = Monomial::parse("a{1,6} a{2,5} a{3,4} a{5,6} b{1,4} b{2,3}");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_type(m, static_cast<int>(state.range(0))));
}
static void BM_canonical_type_brute(benchmark::State& state) {
  const Monomial m = Monomial::parse("a{1,6} a{2,5} a{3,4} a{5,6} b{1,4} b{2,3}");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_type_brute_force(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_canonical_type_reduced)->Arg(6)->Arg(8);
BENCHMARK(BM_canonical_type_brute)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
