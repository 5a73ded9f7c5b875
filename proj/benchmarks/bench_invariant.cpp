#include "toricham/invariant.hpp"
#include "toricham/oracles.hpp"

#include <benchmark/benchmark.h>

using namespace toricham;

namespace {

DelzantModel blowup_model(long tau, long mu) {
  const auto q = oracles::blowup_model(oracles::BlowupParams(Rational(tau), Rational(mu)));
  return build_model(q.weights, q.level);
}

DelzantModel cpn_model(unsigned n) {
  const auto q = oracles::cpn_model(n, Rational(3, 2));
  return build_model(q.weights, q.level);
}

void BM_BuildBlowupModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(blowup_model(2, 1));
}
BENCHMARK(BM_BuildBlowupModel);

void BM_BlowupInvariant(benchmark::State& state) {
  const auto model = blowup_model(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_coordinate(model, 0));
}
BENCHMARK(BM_BlowupInvariant);

void BM_BlowupOracle(benchmark::State& state) {
  const oracles::BlowupParams p(Rational(2), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::invariant(p));
}
BENCHMARK(BM_BlowupOracle);

void BM_TriangulationVolume(benchmark::State& state) {
  const auto model = cpn_model(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(volume(model.polytope));
}
BENCHMARK(BM_TriangulationVolume)->DenseRange(2, 5);

void BM_LasserreVolume(benchmark::State& state) {
  const auto model = cpn_model(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lasserre_volume(model.polytope));
}
BENCHMARK(BM_LasserreVolume)->DenseRange(2, 5);

void BM_CpnAllCoordinateLoops(benchmark::State& state) {
  const auto model = cpn_model(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    for (std::size_t a = 0; a < model.coordinate_count(); ++a) {
      benchmark::DoNotOptimize(invariant_coordinate(model, a));
    }
  }
}
BENCHMARK(BM_CpnAllCoordinateLoops)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
