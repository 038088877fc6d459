#include <benchmark/benchmark.h>

#include "ogm/certificates.hpp"
#include "ogm/coefficients.hpp"
#include "ogm/fo_engine.hpp"
#include "ogm/methods.hpp"
#include "ogm/problems.hpp"

namespace {

// Huber keeps problem setup and each oracle call O(d), so these benchmarks
// measure the methods rather than a dense matvec.
ogm::SmoothProblem bench_problem(int dim) {
  return ogm::make_huber(dim, 0.5, Eigen::VectorXd::Zero(dim));
}

void SequenceBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ogm::fgm_t_sequence(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SequenceBuild)->Range(64, 16384)->Complexity(benchmark::oN);

void OgmTableDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ogm::build_h_ogm_direct(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(OgmTableDirect)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void Ogm1Run(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ogm::SmoothProblem p = bench_problem(dim);
  const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(dim, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ogm::run_ogm1(p, x0, 50));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(Ogm1Run)->Range(256, 65536)->Complexity(benchmark::oN);

void GeneralFoRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ogm::SmoothProblem p = bench_problem(256);
  const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(256, 2.0);
  const ogm::CoefficientTable h = ogm::build_h_ogm_direct(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ogm::run_fo(p, x0, h));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GeneralFoRun)->Range(8, 128)->Complexity(benchmark::oNSquared);

void CertifyOgm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ogm::run_full_certification(ogm::CertFamily::Ogm, n, 1e-10));
  }
}
BENCHMARK(CertifyOgm)->Arg(10)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
