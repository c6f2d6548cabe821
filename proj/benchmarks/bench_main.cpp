#include <benchmark/benchmark.h>

#include "mlharm/mlharm.hpp"

namespace {

using mlharm::Complex;
using mlharm::FamilyParams;
using mlharm::MLParams;

void BM_MlEvalExponential(benchmark::State& state) {
  const auto ml = MLParams::exponential();
  const Complex z(1.2, -0.7);
  for (auto _ : state) benchmark::DoNotOptimize(mlharm::ml_eval(ml, z));
}
BENCHMARK(BM_MlEvalExponential);

void BM_MlEvalGeneral(benchmark::State& state) {
  const MLParams ml(Complex(0.5, 0.2), Complex(1.5, -0.3), 2.0, Complex(1.2, 0.4), 0.8, 0.6);
  const Complex z(0.3, -0.7);
  for (auto _ : state) benchmark::DoNotOptimize(mlharm::ml_eval(ml, z));
}
BENCHMARK(BM_MlEvalGeneral);

void BM_ComplexGamma(benchmark::State& state) {
  const Complex z(3.7, -12.5);
  for (auto _ : state) benchmark::DoNotOptimize(mlharm::complex_gamma(z));
}
BENCHMARK(BM_ComplexGamma);

void BM_WeightTable(benchmark::State& state) {
  const MLParams ml(0.5, 2.0, 1.5, 1.0, 1.0, 1.0);
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mlharm::weight_table(ml, 3, K));
}
BENCHMARK(BM_WeightTable)->Arg(16)->Arg(64)->Arg(256);

void BM_VerifyMember(benchmark::State& state) {
  const FamilyParams fp(2, 1, 0.3, MLParams::ruscheweyh());
  mlharm::Rng rng(7);
  const auto f = mlharm::random_member(rng, fp);
  const auto grid = mlharm::SampleGrid::standard();
  for (auto _ : state) benchmark::DoNotOptimize(mlharm::verify_member(f.map(), fp, grid));
}
BENCHMARK(BM_VerifyMember);

void BM_NecessityCheck(benchmark::State& state) {
  const FamilyParams fp(3, 1, 0.2, MLParams::exponential());
  mlharm::Rng rng(11);
  const auto f = mlharm::random_member(rng, fp);
  for (auto _ : state) benchmark::DoNotOptimize(mlharm::necessity_check(f, fp));
}
BENCHMARK(BM_NecessityCheck);

}  // namespace

BENCHMARK_MAIN();
