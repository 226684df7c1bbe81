#include <benchmark/benchmark.h>

#include "gupho/determinants.hpp"
#include "gupho/entropy.hpp"
#include "gupho/nystrom.hpp"
#include "gupho/sweep.hpp"
#include "gupho/verify.hpp"

namespace {

const gupho::GupParams kParams{1.0, 1.0, 1.0, 1.0, 0.01};

void BM_TraceRhoN(benchmark::State& state) {
  const int n = int(state.range(0));
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gupho::trace_rho_n(kParams, x, n));
    x = x < 20.0 ? x + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_TraceRhoN)->Arg(2)->Arg(8);

void BM_VonNeumann(benchmark::State& state) {
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gupho::von_neumann(kParams, t).value);
    t = t < 100.0 ? t + 1e-2 : 0.5;
  }
}
BENCHMARK(BM_VonNeumann);

void BM_DetClosedForm(benchmark::State& state) {
  const gupho::AbPair ab{1.0, 0.5};
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gupho::det_G(ab, n));
}
BENCHMARK(BM_DetClosedForm)->Arg(4)->Arg(12);

void BM_DetLu(benchmark::State& state) {
  const gupho::AbPair ab{1.0, 0.5};
  const int n = int(state.range(0));
  const Eigen::MatrixXd m = gupho::build_G(ab, n);
  for (auto _ : state) benchmark::DoNotOptimize(gupho::lu_det(m));
}
BENCHMARK(BM_DetLu)->Arg(4)->Arg(12);

void BM_TraceReassembly(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gupho::trace_rho_n_reassembled(kParams, 1.0, n).value());
}
BENCHMARK(BM_TraceReassembly)->Arg(3)->Arg(6);

void BM_NystromDiscretize(benchmark::State& state) {
  const gupho::GridSpec grid{10.0, int(state.range(0)), gupho::QuadScheme::trapezoid};
  for (auto _ : state)
    benchmark::DoNotOptimize(gupho::discretize(kParams, 1.0, grid));
}
BENCHMARK(BM_NystromDiscretize)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_NystromEigenvalues(benchmark::State& state) {
  const gupho::GridSpec grid{10.0, int(state.range(0)), gupho::QuadScheme::trapezoid};
  const Eigen::MatrixXd m = gupho::discretize(kParams, 1.0, grid);
  for (auto _ : state) benchmark::DoNotOptimize(gupho::eigenvalues(m));
}
BENCHMARK(BM_NystromEigenvalues)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_PuritySweep(benchmark::State& state) {
  gupho::SweepConfig cfg;
  cfg.steps = int(state.range(0));
  cfg.alphas = {0.0, 0.04, 0.08};
  for (auto _ : state) {
    std::ostringstream out;
    gupho::write_purity_csv(cfg, out);
    benchmark::DoNotOptimize(out.str());
  }
}
BENCHMARK(BM_PuritySweep)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
