#include <benchmark/benchmark.h>

#include "gmhd/field_ops.hpp"
#include "gmhd/gevrey.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/lab.hpp"
#include "gmhd/solver.hpp"
#include "gmhd/transform.hpp"

using namespace gmhd;

namespace {

MHDState state(int n) { return random_band(Grid(n), {3, std::max(1, (n - 1) / 3 - 1), 0.5, 0.2}); }

void BM_RoundTrip(benchmark::State& st) {
  const MHDState s = state(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(to_spectral(to_physical(s.u)));
}
BENCHMARK(BM_RoundTrip)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Advect(benchmark::State& st) {
  const MHDState s = state(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(advect(s.u, s.h));
}
BENCHMARK(BM_Advect)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RhsPrimitive(benchmark::State& st) {
  const MHDState s = state(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rhs_primitive(s));
}
BENCHMARK(BM_RhsPrimitive)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_StepRK4(benchmark::State& st) {
  const MHDState s = state(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(step_rk4(s, 1e-3));
}
BENCHMARK(BM_StepRK4)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Norms(benchmark::State& st) {
  const MHDState s = state(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(compute_norms(s, {4.5, 1.0, 0.2}));
}
BENCHMARK(BM_Norms)->Arg(32)->Unit(benchmark::kMillisecond);

// direct triad sum, the quadratic-in-band oracle
void BM_TriadSum(benchmark::State& st) {
  const LabFields f = lab_fields(1, int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(trilinear_bruteforce(f.u, f.j, f.omega, {1, 3.0, 0.2, 1.0}));
}
BENCHMARK(BM_TriadSum)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TriadTransform(benchmark::State& st) {
  const LabFields f = lab_fields(1, int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(trilinear_transform(f.u, f.j, f.omega, {1, 3.0, 0.2, 1.0}));
}
BENCHMARK(BM_TriadTransform)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
