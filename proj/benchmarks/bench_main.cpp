#include <angmom/classical_rotor.hpp>
#include <angmom/harmonics.hpp>
#include <angmom/semiclassics.hpp>
#include <angmom/vector_addition.hpp>
#include <angmom/wigner.hpp>

#include <benchmark/benchmark.h>

#include <numbers>

using namespace angmom;

static void BM_ClebschGordanAllJ(benchmark::State &state) {
  for (auto _ : state) {
    for (int J = 28; J <= 142; ++J)
      benchmark::DoNotOptimize(clebsch_gordan_int(57, -25, 85, 37, J, 12));
  }
  state.SetItemsProcessed(state.iterations() * 115);
}
BENCHMARK(BM_ClebschGordanAllJ);

static void BM_ClebschGordanLarge(benchmark::State &state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(clebsch_gordan_int(j, j / 3, j, -j / 4, j, j / 3 - j / 4));
}
BENCHMARK(BM_ClebschGordanLarge)->Arg(10)->Arg(100)->Arg(400);

static void BM_ThetaProfile(benchmark::State &state) {
  const int j = static_cast<int>(state.range(0));
  const ThetaProfile p(j, j / 2);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p(t));
    t += 1e-6;
  }
}
BENCHMARK(BM_ThetaProfile)->Arg(10)->Arg(60)->Arg(200);

static void BM_Gaunt(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gaunt_integral_int(31, 13, 31, 14, 56, 27));
}
BENCHMARK(BM_Gaunt);

static void BM_AngularDensityBuild(benchmark::State &state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(angular_density(HalfInt::integer(j), HalfInt::integer(j / 2)));
}
BENCHMARK(BM_AngularDensityBuild)->Arg(30)->Arg(60);

static void BM_WkbLeadingBuild(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wkb_leading(HalfInt::integer(30), HalfInt::integer(15)));
}
BENCHMARK(BM_WkbLeadingBuild);

static void BM_SampleAngles(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_angles(std::numbers::pi / 3, n, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleAngles)->Arg(100000)->Arg(1000000);

static void BM_SampleTotalL(benchmark::State &state) {
  const auto p = ClassicalPair::from_projections(57, -25, 85, 37);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_total_L(p, 1000000, 1));
  state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_SampleTotalL);

BENCHMARK_MAIN();
