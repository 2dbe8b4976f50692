#include <benchmark/benchmark.h>

#include "dqeig/dcam.hpp"
#include "dqeig/eig.hpp"
#include "dqeig/graphgen.hpp"

namespace {

using namespace dqeig;

void BM_DualQuaternionProduct(benchmark::State& state) {
  Rng rng(1);
  DualQuaternion p = random_unit_dual_quaternion(rng), q = random_unit_dual_quaternion(rng);
  for (auto _ : state) {
    p = p * q;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_DualQuaternionProduct);

void BM_MatVec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const DQMatrix a = random_dual_quaternion_matrix(n, n, rng);
  const DQVector v = random_initial_vector(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * v);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatVec)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_DcamMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const DQMatrix a = random_dual_quaternion_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dcam_map(a));
}
BENCHMARK(BM_DcamMap)->RangeMultiplier(4)->Range(8, 128);

// Fixed iteration count so PM and DCAM-PM do the same number of steps.
template <bool Dcam>
void BM_PowerIteration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const DQMatrix a = wheel_laplacian(n, rng).laplacian;
  const DQVector v0 = random_initial_vector(n, rng);
  SolverConfig cfg;
  cfg.k_max = 100;
  cfg.tol = 1e-300;
  for (auto _ : state) {
    const EigResult r = Dcam ? dcam_power_method(a, v0, cfg) : power_method(a, v0, cfg);
    benchmark::DoNotOptimize(r.eigenvalue);
  }
  state.SetItemsProcessed(state.iterations() * cfg.k_max);
}
BENCHMARK(BM_PowerIteration<false>)->Name("BM_PM")->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_PowerIteration<true>)->Name("BM_DCAM_PM")->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
