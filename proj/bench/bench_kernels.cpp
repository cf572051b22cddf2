// Serial reference kernels against their OpenMP counterparts, plus the two
// end-to-end workloads they feed (matrix assembly, long simulations).
//
//   ./fdstab_bench --benchmark_filter=stencil
//   FDSTAB_NUM_THREADS=4 ./fdstab_bench

#include <cstdlib>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fdstab/builtins.hpp"
#include "fdstab/kernels.hpp"
#include "fdstab/operator.hpp"

using namespace fdstab;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <auto Kernel>
void BM_stencil(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_vec(15, 1);
  const auto ext = random_vec(n + 14, 2);
  std::vector<double> out(n);
  for (auto _ : state) {
    Kernel(c, ext, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Kernel>
void BM_matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n * n, 3);
  const auto x = random_vec(n, 4);
  std::vector<double> y(n);
  for (auto _ : state) {
    Kernel(a, n, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(n * n * sizeof(double)));
}

template <auto Kernel>
void BM_symbol(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_vec(15, 5);
  std::vector<double> out(n);
  const double h = 2 * std::numbers::pi / static_cast<double>(n);
  for (auto _ : state) {
    Kernel(c, 7, -std::numbers::pi, h, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_assemble(benchmark::State& state) {
  const Scheme s = coeff1();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_matrix(s, 1, static_cast<int>(state.range(0))));
}

void BM_interval_steps(benchmark::State& state) {
  const Scheme s = coeff1();
  const int J = 994;
  const IntervalStepper st(s, 1, J);
  auto u = random_vec(static_cast<std::size_t>(J) + 1, 6);
  std::vector<double> next(u.size()), scratch(st.scratch_size());
  for (auto _ : state) {
    for (int n = 0; n < 1000; ++n) {
      st.apply(u, next, scratch);
      u.swap(next);
    }
    benchmark::DoNotOptimize(u.data());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}

}  // namespace

BENCHMARK(BM_stencil<kernels::stencil_apply_serial>)->Name("stencil/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_stencil<kernels::stencil_apply_omp>)->Name("stencil/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_matvec<kernels::matvec_serial>)->Name("matvec/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_matvec<kernels::matvec_omp>)->Name("matvec/omp")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_symbol<kernels::sample_symbol_modulus2_serial>)->Name("symbol/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_symbol<kernels::sample_symbol_modulus2_omp>)->Name("symbol/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_assemble)->Name("assemble/coeff1")->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_interval_steps)->Name("steps/coeff1_J994");

int main(int argc, char** argv) {
  if (const char* t = std::getenv("FDSTAB_NUM_THREADS")) kernels::set_max_threads(std::atoi(t));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
